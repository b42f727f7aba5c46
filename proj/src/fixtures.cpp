#include "medist/fixtures.hpp"

#include <stdexcept>

#include "medist/optimal.hpp"

namespace medist::fixtures {

namespace {

#include "fixtures_data.inc"

constexpr const char* kProfileText =
    "# seven facilities, seven voters (three preference classes)\n"
    "candidates: a b c d e f g\n"
    "3 : c e b a f g d\n"
    "3 : d g f a e b c\n"
    "1 : b a f g e c d\n";

struct QEntry {
    char facility;
    long long micro;
};
constexpr QEntry kLotteryTable[] = {
    {'a', 39301}, {'b', 121723}, {'c', 388299}, {'d', 291224},
    {'e', 107872}, {'f', 29475}, {'g', 22107},
};

constexpr double kGamma = 2.063164;

// Certificate metrics, one shortest-path graph per facility. Edge weights are
// integer multiples of a per-graph unit (in millionths); colocated labels sit
// at distance zero. Group points: C1 (voters 1-3), C2 (voters 4-6), C3
// (voter 7).
struct GraphPair {
    const char* a;
    const char* b;
};
struct GraphEdge {
    const char* a;
    const char* b;
    int mult;
};
struct GraphSpec {
    char o;
    long long unit_micro;
    std::vector<GraphPair> coloc;
    std::vector<GraphEdge> edges;
};

const std::vector<GraphSpec>& graph_specs() {
    static const std::vector<GraphSpec> specs = {
        {'a',
         14507,
         {{"c", "e"}, {"d", "f"}, {"f", "g"}},
         {{"C1", "a", 1},
          {"C1", "b", 1},
          {"C1", "c", 1},
          {"C2", "d", 1},
          {"C2", "a", 1},
          {"C3", "a", 1},
          {"C3", "b", 1}}},
        {'b',
         20955,
         {{"b", "C3"}, {"a", "d"}, {"d", "f"}, {"f", "g"}},
         {{"C1", "b", 1},
          {"C1", "e", 1},
          {"C1", "c", 1},
          {"C2", "a", 1},
          {"C2", "b", 1},
          {"C2", "e", 1}}},
        {'c',
         38866,
         {{"c", "C1"}, {"a", "b"}, {"b", "e"}, {"e", "f"}, {"f", "g"}},
         {{"C2", "d", 1}, {"C2", "c", 1}, {"C2", "a", 1}, {"C3", "c", 1}, {"C3", "a", 1}}},
        {'d',
         51820,
         {{"d", "C2"}, {"a", "b"}, {"b", "c"}, {"c", "e"}, {"e", "f"}, {"f", "g"}},
         {{"C3", "C1", 1}, {"C1", "d", 1}, {"C1", "a", 1}, {"d", "C3", 1}, {"a", "C3", 1}}},
        {'e',
         13433,
         {{"a", "f"}, {"f", "g"}},
         {{"d", "C2", 1},
          {"C2", "a", 1},
          {"C2", "e", 1},
          {"a", "C3", 1},
          {"C3", "b", 1},
          {"C3", "e", 1},
          {"C1", "e", 1},
          {"C1", "c", 1}}},
        {'f',
         19343,
         {{"c", "e"}, {"a", "b"}, {"d", "g"}},
         {{"c", "d", 2},
          {"f", "C1", 1},
          {"c", "C1", 1},
          {"a", "C1", 1},
          {"C2", "d", 1},
          {"C2", "f", 1},
          {"a", "C3", 1},
          {"C3", "f", 1},
          {"a", "d", 2}}},
        {'g',
         25791,
         {{"a", "b"}, {"b", "f"}, {"c", "e"}},
         {{"d", "a", 2},
          {"d", "c", 2},
          {"d", "C2", 1},
          {"g", "C2", 1},
          {"g", "C3", 1},
          {"a", "C3", 1},
          {"a", "C1", 1},
          {"g", "C1", 1},
          {"c", "C1", 1}}},
    };
    return specs;
}

int space_index(const PointSpace& sp, const std::string& label) {
    int i = sp.index_of(label);
    if (i < 0) throw std::logic_error("fixture references unknown point: " + label);
    return i;
}

// Published table tokens: a facility letter, or a client digit 1..7 that maps
// onto the expanded profile's group points C1..C7.
std::string token_label(const char* t) {
    if (t[0] >= '1' && t[0] <= '9') return std::string("C") + t;
    return t;
}

}  // namespace

std::string reference_profile_text() { return kProfileText; }

const PreferenceProfile& reference_instance() {
    static const PreferenceProfile instance = parse_profile(kProfileText);
    return instance;
}

PreferenceProfile reference_instance_expanded() { return expand(reference_instance()); }

Lottery reference_lottery() {
    const auto& profile = reference_instance();
    Lottery q;
    q.probs.assign(profile.num_facilities(), 0.0);
    for (const auto& e : kLotteryTable)
        q.probs[profile.facility_index(std::string(1, e.facility))] =
            static_cast<double>(e.micro) / 1e6;
    return q;
}

double reference_gamma() { return kGamma; }

Certificate reference_certificate() {
    Certificate cert{reference_instance(), {}, kGamma};
    const PointSpace sp = PointSpace::of(cert.profile);
    for (const auto& spec : graph_specs()) {
        Certificate::Entry entry;
        entry.facility = cert.profile.facility_index(std::string(1, spec.o));
        MetricGraph graph{sp, {}, {}};
        for (const auto& c : spec.coloc)
            graph.colocations.emplace_back(space_index(sp, c.a), space_index(sp, c.b));
        for (const auto& e : spec.edges) {
            graph.edges.push_back({space_index(sp, e.a), space_index(sp, e.b),
                                   static_cast<double>(e.mult * spec.unit_micro) / 1e6});
            entry.exact_weights.emplace_back(e.mult * spec.unit_micro, 1000000);
        }
        entry.data = std::move(graph);
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

ReferenceBestDistPoint reference_best_dist_point() {
    PreferenceProfile expanded = reference_instance_expanded();
    const PointSpace sp = PointSpace::of(expanded);
    ReferenceBestDistPoint out{build_best_dist(expanded), {}};
    out.point.assign(out.lp.num_variables(), 0.0);

    auto set_var = [&](const std::string& name, double value) {
        int idx = out.lp.variable_index(name);
        if (idx < 0) throw std::logic_error("fixture references unknown LP variable: " + name);
        out.point[idx] += value;
    };

    set_var("gamma", kGamma);
    for (const auto& e : kLotteryTable)
        set_var(best_dist_q_name(std::string(1, e.facility)),
                static_cast<double>(e.micro) / 1e6);
    for (const auto& f : expanded.facilities()) set_var(best_dist_y_name(f, "norm"), kGamma);
    for (const auto& b : kBetaTable)
        set_var(best_dist_y_name(std::string(1, b.o),
                                 consistency_row_name(sp, b.client - 1, b.rank)),
                static_cast<double>(b.micro) / 1e6);
    // Rotation convention of the published table, per triple (t1, t2, t3):
    // subscript 1 bounds the side {t2,t3}, 2 the side {t1,t2}, 3 the side
    // {t1,t3}; the two-facility family prints only the {t1,t3} and {t2,t3}
    // rotations (subscripts 1 and 2).
    for (const auto& a : kAlphaTable) {
        int t1 = space_index(sp, token_label(a.t1));
        int t2 = space_index(sp, token_label(a.t2));
        int t3 = space_index(sp, token_label(a.t3));
        int la = 0, lb = 0;
        if (a.family == 1) {
            if (a.k == 1) la = t2, lb = t3;
            else if (a.k == 2) la = t1, lb = t2;
            else la = t1, lb = t3;
        } else {
            if (a.k == 1) la = t1, lb = t3;
            else la = t2, lb = t3;
        }
        set_var(best_dist_y_name(std::string(1, a.o),
                                 triangle_row_name(sp, t1, t2, t3, la, lb)),
                static_cast<double>(a.micro) / 1e6);
    }
    return out;
}

}  // namespace medist::fixtures
