#include "wander/scaffold.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wander {

namespace {

using Rat = boost::multiprecision::cpp_rational;

// Conversion from double is exact (binary rationals), so every comparison
// below is a statement about the stored values, not about rounded ones.
Rat rat(double x) { return Rat(x); }

std::string idx(int k) { return std::to_string(k); }

struct Checker {
    std::vector<ConstraintCheck> checks;

    void add(const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({name, pass, detail});
    }

    // Aggregates a per-index scan into a single named check.
    template <typename F>
    void scan(const std::string& name, int lo, int hi, F&& violation_detail) {
        std::string fail;
        for (int k = lo; k <= hi; ++k) {
            std::string d = violation_detail(k);
            if (!d.empty()) {
                fail = d;
                break;
            }
        }
        add(name, fail.empty(), fail.empty() ? "ok" : fail);
    }
};

}  // namespace

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const ConstraintCheck* ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

bool StructuralReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

Region Region::disk(std::string label, Complex c, double r) {
    Region reg;
    reg.label = std::move(label);
    reg.shape = RegionShape::Disk;
    reg.center = c;
    reg.radius = r;
    return reg;
}

Region Region::vline(std::string label, double x) {
    Region reg;
    reg.label = std::move(label);
    reg.shape = RegionShape::VLine;
    reg.abscissa = x;
    return reg;
}

std::string to_string(TargetVariant v) {
    switch (v) {
        case TargetVariant::Wandering: return "wandering";
        case TargetVariant::Attracting: return "attracting";
        case TargetVariant::CommonPath: return "commonpath";
    }
    return "?";
}

TargetVariant parse_variant(const std::string& name) {
    if (name == "wandering") return TargetVariant::Wandering;
    if (name == "attracting") return TargetVariant::Attracting;
    if (name == "commonpath") return TargetVariant::CommonPath;
    throw std::invalid_argument("unknown variant: " + name);
}

ScaffoldConfig generate_scaffold(double delta, int depth, double growth) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0,1)");
    if (depth < 1)
        throw std::invalid_argument("depth must be >= 1");
    if (!(growth >= 2.0))
        throw std::invalid_argument("growth must be >= 2");

    const int K = depth;
    ScaffoldConfig cfg;
    cfg.delta = delta;
    cfg.depth = K;

    // Radii grow slower than centers so the disks spread apart; the factor
    // (1+growth)/2 keeps l_{k+1}/(4 delta_{k+1}) from collapsing, which is
    // what the B_k approximation tolerances are made of.
    const double l1 = std::max(17.0 * delta / 2.0 * 1.1, 5.0);
    const double lam = (1.0 + growth) / 2.0;
    const double d1 = 6.0 * l1;

    cfg.ells.resize(K + 1);
    cfg.deltas.resize(K + 1);
    for (int k = 0; k <= K; ++k) {
        cfg.ells[k] = l1 * std::pow(lam, k);
        cfg.deltas[k] = d1 * std::pow(growth, k);
    }
    // The last center only serves as the image target of B_K; pulling it in
    // widens that tolerance and shortens the domain to cover.
    cfg.deltas[K] = cfg.deltas[K - 1] * std::pow(growth, 0.6);

    cfg.ms.resize(K);
    for (int k = 0; k < K; ++k)
        cfg.ms[k] = ((cfg.deltas[k] + cfg.ells[k]) + (cfg.deltas[k + 1] - cfg.ells[k + 1])) / 2.0;

    const double r1 = d1;
    const double gr = (growth + 2.0) / 2.0;
    cfg.rs.resize(K);
    cfg.ss.resize(K);
    cfg.ts.resize(K);
    for (int k = 0; k < K; ++k) {
        cfg.rs[k] = r1 * std::pow(gr, k);
        cfg.ss[k] = r1 / 5.0;
    }
    // L_k midway between A_k and A_{k+1}; the last line sits just left of A_K.
    for (int k = 0; k + 1 < K; ++k)
        cfg.ts[k] = ((cfg.rs[k] + cfg.ss[k]) + (cfg.rs[k + 1] - cfg.ss[k + 1])) / 2.0;
    cfg.ts[K - 1] = cfg.rs[K - 1] + 2.0 * cfg.ss[K - 1];

    ValidationReport report = validate_scaffold(cfg);
    if (!report.all_pass()) {
        const ConstraintCheck* f = report.first_failure();
        throw ScaffoldInfeasible("generated scaffold violates '" + f->constraint +
                                 "': " + f->detail);
    }
    return cfg;
}

ValidationReport validate_scaffold(const ScaffoldConfig& cfg) {
    ValidationReport report;
    Checker c;
    const int K = cfg.depth;

    const bool shape_ok = K >= 1 && cfg.deltas.size() == size_t(K + 1) &&
                          cfg.ells.size() == size_t(K + 1) && cfg.ms.size() == size_t(K) &&
                          cfg.rs.size() == size_t(K) && cfg.ss.size() == size_t(K) &&
                          cfg.ts.size() == size_t(K);
    c.add("sequence_shape", shape_ok,
          shape_ok ? "ok" : "expected deltas/ells of length K+1 and ms/rs/ss/ts of length K");
    if (!shape_ok) {
        report.checks = std::move(c.checks);
        return report;
    }

    const Rat delta = rat(cfg.delta);
    auto D = [&](int k) { return rat(cfg.deltas[k - 1]); };  // 1-based
    auto L = [&](int k) { return rat(cfg.ells[k - 1]); };
    auto M = [&](int k) { return rat(cfg.ms[k - 1]); };
    auto Rr = [&](int k) { return rat(cfg.rs[k - 1]); };
    auto S = [&](int k) { return rat(cfg.ss[k - 1]); };
    auto T = [&](int k) { return rat(cfg.ts[k - 1]); };

    c.add("delta_range", delta > 0 && delta < 1, "delta in (0,1)");
    c.add("delta_coupling", Rat(17) * delta / 16 < Rat(9, 8), "17*delta/16 < 9/8");
    c.add("l1_bound", Rat(17) * delta / 16 < L(1) / 8, "17*delta/16 < l_1/8");

    c.scan("radii_positive", 1, K + 1, [&](int k) {
        if (!(L(k) > 0)) return "l_" + idx(k) + " <= 0";
        if (k <= K && !(S(k) > 0)) return "s_" + idx(k) + " <= 0";
        return std::string();
    });
    c.scan("deltas_increasing", 1, K, [&](int k) {
        return D(k) < D(k + 1) ? std::string() : "delta_" + idx(k) + " >= delta_" + idx(k + 1);
    });
    c.scan("ells_increasing", 1, K, [&](int k) {
        return L(k) < L(k + 1) ? std::string() : "l_" + idx(k) + " >= l_" + idx(k + 1);
    });

    {
        std::string fail;
        for (int i = 1; i <= K + 1 && fail.empty(); ++i)
            for (int j = i + 1; j <= K + 1; ++j)
                if (!(D(i) + L(i) < D(j) - L(j))) {
                    fail = "B_" + idx(i) + " meets B_" + idx(j);
                    break;
                }
        c.add("b_disks_disjoint", fail.empty(), fail.empty() ? "ok" : fail);
    }

    // |delta_1 - 1| > l_1 + 3 keeps B_1 clear of G_1 = {|z-1| <= 3}.
    {
        const Rat dist = D(1) > 1 ? D(1) - 1 : Rat(1) - D(1);
        c.add("b1_g1_disjoint", dist > L(1) + 3, "|delta_1 - 1| > l_1 + 3");
    }

    c.scan("m_interleaving", 1, K, [&](int k) {
        if (!(D(k) + L(k) < M(k)))
            return "m_" + idx(k) + " <= delta_" + idx(k) + " + l_" + idx(k);
        if (!(M(k) < D(k + 1) - L(k + 1)))
            return "m_" + idx(k) + " >= delta_" + idx(k + 1) + " - l_" + idx(k + 1);
        return std::string();
    });

    c.scan("r_increasing", 1, K - 1, [&](int k) {
        return Rr(k) < Rr(k + 1) ? std::string() : "r_" + idx(k) + " >= r_" + idx(k + 1);
    });

    {
        std::string fail;
        for (int i = 1; i <= K && fail.empty(); ++i)
            for (int j = i + 1; j <= K; ++j)
                if (!(Rr(j) - S(j) > Rr(i) + S(i))) {
                    fail = "A_" + idx(i) + " meets A_" + idx(j);
                    break;
                }
        c.add("a_disks_disjoint", fail.empty(), fail.empty() ? "ok" : fail);
    }

    c.scan("t_interleaving", 1, K, [&](int k) {
        if (!(-T(k) < -Rr(k) + S(k)))
            return "-t_" + idx(k) + " >= -r_" + idx(k) + " + s_" + idx(k);
        if (k < K && !(-Rr(k + 1) + S(k + 1) < -T(k)))
            return "-t_" + idx(k) + " <= -r_" + idx(k + 1) + " + s_" + idx(k + 1);
        return std::string();
    });

    c.scan("a_left_of_g1", 1, K, [&](int k) {
        return -Rr(k) + S(k) < -2 ? std::string() : "A_" + idx(k) + " reaches Re z >= -2";
    });

    // 17/16 < l_k/(8 delta): the second coordinate of F always lands inside
    // every B' w-bound.
    c.scan("w_bound_chain", 1, K + 1, [&](int k) {
        return Rat(17, 16) < L(k) / (8 * delta) ? std::string()
                                                : "l_" + idx(k) + "/(8 delta) <= 17/16";
    });

    report.checks = std::move(c.checks);
    return report;
}

namespace {

struct Piece {
    std::string label;
    bool is_line;
    Rat lo, hi;  // horizontal extent: [center - r, center + r] or [x, x]
};

}  // namespace

StructuralReport nersesjan_check(const ScaffoldConfig& cfg) {
    StructuralReport report;
    Checker c;
    const int K = cfg.depth;

    const ValidationReport base = validate_scaffold(cfg);
    if (!base.all_pass()) {
        const ConstraintCheck* f = base.first_failure();
        c.add("base_constraints", false, "validate_scaffold fails '" + f->constraint + "'");
        report.checks = std::move(c.checks);
        return report;
    }
    c.add("base_constraints", true, "ok");

    // (i) pairwise disjoint pieces with positive gaps.  Every piece is a
    // disk or a vertical line, so horizontal extents decide disjointness.
    std::vector<Piece> pieces;
    pieces.push_back({"G1", false, Rat(-2), Rat(4)});
    for (int k = 1; k <= K; ++k) {
        const Rat d = rat(cfg.deltas[k - 1]), l = rat(cfg.ells[k - 1]);
        pieces.push_back({"B" + idx(k), false, d - l, d + l});
        const Rat m = rat(cfg.ms[k - 1]);
        pieces.push_back({"M" + idx(k), true, m, m});
        const Rat r = rat(cfg.rs[k - 1]), s = rat(cfg.ss[k - 1]);
        pieces.push_back({"A" + idx(k), false, -r - s, -r + s});
        const Rat t = rat(cfg.ts[k - 1]);
        pieces.push_back({"L" + idx(k), true, -t, -t});
    }

    Rat min_gap;
    bool first = true;
    std::string overlap;
    for (size_t i = 0; i < pieces.size(); ++i) {
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            const Rat gap = pieces[i].lo > pieces[j].lo ? pieces[i].lo - pieces[j].hi
                                                        : pieces[j].lo - pieces[i].hi;
            if (first || gap < min_gap) {
                min_gap = gap;
                first = false;
            }
            if (gap <= 0 && overlap.empty())
                overlap = pieces[i].label + " meets " + pieces[j].label;
        }
    }
    c.add("pieces_disjoint_with_gaps", overlap.empty(), overlap.empty() ? "ok" : overlap);
    report.min_gap = overlap.empty() ? static_cast<double>(min_gap) : 0.0;

    // (ii) escape: center spacing never shrinks, so any compact set meets
    // only finitely many pieces and no interior component runs to infinity.
    {
        std::string fail;
        for (int k = 1; k + 1 <= K && fail.empty(); ++k) {
            const Rat a = rat(cfg.deltas[k]) - rat(cfg.deltas[k - 1]);
            const Rat b = rat(cfg.deltas[k + 1]) - rat(cfg.deltas[k]);
            if (b < a) fail = "delta spacing shrinks at k=" + idx(k + 1);
        }
        for (int k = 1; k + 2 <= K && fail.empty(); ++k) {
            const Rat a = rat(cfg.rs[k]) - rat(cfg.rs[k - 1]);
            const Rat b = rat(cfg.rs[k + 1]) - rat(cfg.rs[k]);
            if (b < a) fail = "r spacing shrinks at k=" + idx(k + 1);
        }
        c.add("escape_monotone", fail.empty(), fail.empty() ? "ok" : fail);
    }

    report.checks.insert(report.checks.end(), c.checks.begin() + 1, c.checks.end());
    report.checks.insert(report.checks.begin(), c.checks.front());
    return report;
}

std::vector<Region> scaffold_regions(const ScaffoldConfig& cfg, TargetVariant variant) {
    std::vector<Region> regs;
    regs.push_back(Region::disk("G1", {1.0, 0.0}, 3.0));
    for (int k = 1; k <= cfg.depth; ++k) {
        regs.push_back(Region::disk("B" + idx(k), {cfg.deltas[k - 1], 0.0}, cfg.ells[k - 1]));
        regs.push_back(Region::vline("M" + idx(k), cfg.ms[k - 1]));
    }
    if (variant != TargetVariant::Attracting) {
        for (int k = 1; k <= cfg.depth; ++k) {
            regs.push_back(Region::disk("A" + idx(k), {-cfg.rs[k - 1], 0.0}, cfg.ss[k - 1]));
            regs.push_back(Region::vline("L" + idx(k), -cfg.ts[k - 1]));
        }
    }
    return regs;
}

std::vector<ProductDomain> product_domains(const ScaffoldConfig& cfg, TargetVariant variant) {
    std::vector<ProductDomain> out;
    auto disk = [](std::string label, Complex c, double r, WBound w) {
        ProductDomain d;
        d.label = std::move(label);
        d.shape = RegionShape::Disk;
        d.center = c;
        d.radius = r;
        d.w = w;
        return d;
    };
    auto vline = [](std::string label, double x) {
        ProductDomain d;
        d.label = std::move(label);
        d.shape = RegionShape::VLine;
        d.abscissa = x;
        d.w = {0.0, true, true};
        return d;
    };

    for (int k = 1; k <= cfg.depth; ++k)
        out.push_back(disk("B'" + idx(k), {cfg.deltas[k - 1], 0.0}, cfg.ells[k - 1],
                           {cfg.ells[k - 1] / (8.0 * cfg.delta), /*closed=*/false, false}));
    for (int k = 1; k <= cfg.depth; ++k)
        out.push_back(vline("M'" + idx(k), cfg.ms[k - 1]));
    if (variant != TargetVariant::Attracting) {
        for (int k = 1; k <= cfg.depth; ++k)
            out.push_back(disk("A'" + idx(k), {-cfg.rs[k - 1], 0.0}, cfg.ss[k - 1],
                               {cfg.ells[0] / 4.0, /*closed=*/true, false}));
        for (int k = 1; k <= cfg.depth; ++k)
            out.push_back(vline("L'" + idx(k), -cfg.ts[k - 1]));
    }
    out.push_back(disk("G2", {1.0, 0.0}, 3.0, {9.0 / (8.0 * cfg.delta), true, false}));
    return out;
}

}  // namespace wander
