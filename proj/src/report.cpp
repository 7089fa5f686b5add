#include "bumpkit/report.hpp"

#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bumpkit/rs.hpp"
#include "bumpkit/statistics.hpp"

namespace bumpkit {

StatsReport make_stats_report(const Permutation& p) {
    StatsReport r;
    r.permutation = p.word();
    r.n = p.size();
    const auto rsr = rs(p);
    r.shape = rsr.P.shape().parts();
    r.P = rsr.P.rows();
    r.Q = rsr.Q.rows();
    r.bump_sequence = rsr.bump_sequence;
    r.bump = std::accumulate(r.bump_sequence.begin(), r.bump_sequence.end(), 0l);
    r.weakbump = weakbump(p);
    r.descents = descent_set(p);
    r.alpha = alpha_sequence(p);
    return r;
}

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string stats_to_text(const StatsReport& r) {
    std::ostringstream os;
    os << "permutation: " << join(r.permutation, " ") << '\n';
    os << "n: " << r.n << '\n';
    os << "shape: (" << join(r.shape, ",") << ")\n";
    os << "P:\n";
    for (const auto& row : r.P) os << "  " << join(row, " ") << '\n';
    os << "Q:\n";
    for (const auto& row : r.Q) os << "  " << join(row, " ") << '\n';
    os << "bump: " << r.bump << '\n';
    os << "bump sequence: (" << join(r.bump_sequence, ",") << ")\n";
    os << "weakbump: " << r.weakbump << '\n';
    os << "descents: {" << join(r.descents, ",") << "}\n";
    os << "alpha: (" << join(r.alpha, ",") << ")\n";
    return os.str();
}

std::string stats_to_json(const StatsReport& r) {
    nlohmann::json j{{"permutation", r.permutation},
                     {"n", r.n},
                     {"shape", r.shape},
                     {"P", r.P},
                     {"Q", r.Q},
                     {"bump", r.bump},
                     {"bump_sequence", r.bump_sequence},
                     {"weakbump", r.weakbump},
                     {"descents", r.descents},
                     {"alpha", r.alpha}};
    return j.dump();
}

StatsReport stats_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    StatsReport r;
    r.permutation = j.at("permutation").get<std::vector<int>>();
    r.n = j.at("n").get<int>();
    r.shape = j.at("shape").get<std::vector<int>>();
    r.P = j.at("P").get<std::vector<std::vector<int>>>();
    r.Q = j.at("Q").get<std::vector<std::vector<int>>>();
    r.bump = j.at("bump").get<long>();
    r.bump_sequence = j.at("bump_sequence").get<std::vector<int>>();
    r.weakbump = j.at("weakbump").get<int>();
    r.descents = j.at("descents").get<std::vector<int>>();
    r.alpha = j.at("alpha").get<std::vector<int>>();
    return r;
}

} // namespace bumpkit
