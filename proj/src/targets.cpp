#include "wander/targets.hpp"

#include <cmath>

#include "wander/interval.hpp"

namespace wander {

const TargetEntry* PiecewiseTarget::find(const std::string& region) const {
    for (const auto& e : entries)
        if (e.region == region) return &e;
    return nullptr;
}

double exp_tolerance(Complex target, double image_radius) {
    const double mod = std::exp(target.real());  // |e^{target}|
    return ulp_down(std::log1p(image_radius / mod));
}

PiecewiseTarget build_target(const ScaffoldConfig& cfg, TargetVariant variant) {
    PiecewiseTarget out;
    out.variant = variant;
    const int K = cfg.depth;
    constexpr double kPi = 3.14159265358979323846;

    auto add = [&](const std::string& region, Complex target, double exp_radius) {
        TargetEntry e;
        e.region = region;
        e.target = target;
        e.tolerance = exp_tolerance(target, exp_radius);
        e.exp_center = std::exp(target);
        e.exp_radius = exp_radius;
        out.entries.push_back(e);
    };

    // log 1 = 0 on G_1 and on every line; exp image stays within 1/16 of 1.
    add("G1", {0.0, 0.0}, 1.0 / 16.0);
    for (int k = 1; k <= K; ++k) {
        switch (variant) {
            case TargetVariant::Wandering:
            case TargetVariant::CommonPath:
                add("B" + std::to_string(k), {std::log(cfg.deltas[k]), 0.0}, cfg.ells[k] / 4.0);
                break;
            case TargetVariant::Attracting:
                add("B" + std::to_string(k), {std::log(cfg.deltas[k - 1]), 0.0},
                    cfg.ells[k - 1] / 4.0);
                break;
        }
        add("M" + std::to_string(k), {0.0, 0.0}, 1.0 / 16.0);
    }
    if (variant != TargetVariant::Attracting) {
        for (int k = 1; k <= K; ++k) {
            if (variant == TargetVariant::Wandering) {
                // e^{pi i + log r_1} = -r_1: the A_k disks map next to -r_1.
                add("A" + std::to_string(k), {std::log(cfg.rs[0]), kPi}, cfg.ss[0] / 8.0);
            } else {
                add("A" + std::to_string(k), {std::log(cfg.deltas[0]), 0.0}, cfg.ells[0] / 4.0);
            }
            add("L" + std::to_string(k), {0.0, 0.0}, 1.0 / 16.0);
        }
    }

    out.f2_tolerance = exp_tolerance({0.0, 0.0}, 1.0 / 16.0);
    return out;
}

}  // namespace wander
