#include "poincare/sa.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "poincare/constant.hpp"
#include "poincare/errors.hpp"
#include "poincare/parallel.hpp"

namespace poincare::sa {

namespace {

std::vector<unsigned> first_primes(std::size_t count) {
    std::vector<unsigned> primes;
    for (unsigned c = 2; primes.size() < count; ++c) {
        bool prime = true;
        for (unsigned p : primes) {
            if (p * p > c) break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(c);
    }
    return primes;
}

constexpr double kOpenEps = 1e-16;

double open_unit(double u) { return std::clamp(u, kOpenEps, 1.0 - kOpenEps); }

}  // namespace

Halton::Halton(std::size_t dimension, std::uint64_t seed) : bases_(first_primes(dimension)) {
    std::mt19937_64 rng(seed);
    shifts_.resize(dimension);
    for (std::size_t k = 0; k < dimension; ++k) {
        const unsigned b = bases_[k];
        // Enough digits to reach double resolution in this base.
        const auto digits = static_cast<std::size_t>(std::ceil(53.0 * std::log(2.0) / std::log(b))) + 1;
        std::uniform_int_distribution<unsigned> digit(0, b - 1);
        shifts_[k].resize(digits);
        for (auto& s : shifts_[k]) s = digit(rng);
    }
}

std::vector<double> Halton::point(std::uint64_t index) const {
    std::vector<double> x(bases_.size());
    const std::uint64_t n = index + 1;
    for (std::size_t k = 0; k < bases_.size(); ++k) {
        const unsigned b = bases_[k];
        const double inv_b = 1.0 / b;
        double scale = inv_b, v = 0.0;
        std::uint64_t m = n;
        for (unsigned s : shifts_[k]) {
            const auto digit = static_cast<unsigned>(m % b);
            m /= b;
            v += ((digit + s) % b) * scale;
            scale *= inv_b;
        }
        x[k] = open_unit(v);
    }
    return x;
}

namespace {

// Model outputs on a pick-freeze design: blocks A and B, and for each input i
// the hybrid A_B^(i) (A with column i taken from B). Squared gradients are
// taken at the A points.
struct Design {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> fA, fB;
    std::vector<double> fAB;    // [i * n + j]
    std::vector<double> grad2;  // [i * n + j]
};

Evaluation evaluate_at(const ModelFunction& model, std::span<const double> x, std::size_t j) {
    try {
        Evaluation e = model.evaluate(x);
        if (e.gradient.size() != model.dimension)
            throw NumericalError("model returned a gradient of the wrong size");
        return e;
    } catch (const DomainError& e) {
        throw DomainError("model evaluation failed at sample " + std::to_string(j) + ": " + e.what());
    } catch (const Error& e) {
        throw NumericalError("model evaluation failed at sample " + std::to_string(j) + ": " + e.what());
    }
}

Design run_design(const ModelFunction& model, const std::vector<DistributionSpec>& dists,
                  const SampleOptions& opt, bool pick_freeze) {
    const std::size_t d = model.dimension;
    if (d == 0 || dists.size() != d) throw ArgumentError("need one distribution per model input");
    if (opt.n < 100) throw ArgumentError("sample size must be at least 100");
    const std::size_t n = opt.n;
    const std::size_t dim = pick_freeze ? 2 * d : d;

    // Uniform design, drawn sequentially so that it depends only on the seed.
    std::vector<double> u(n * dim);
    if (opt.sampling == Sampling::halton) {
        const Halton h(dim, opt.seed);
        for (std::size_t j = 0; j < n; ++j) {
            const auto p = h.point(j);
            std::copy(p.begin(), p.end(), u.begin() + static_cast<std::ptrdiff_t>(j * dim));
        }
    } else {
        std::mt19937_64 rng(opt.seed);
        for (double& v : u) v = open_unit(std::generate_canonical<double, 53>(rng));
    }

    Design des;
    des.n = n;
    des.d = d;
    des.fA.resize(n);
    des.grad2.resize(d * n);
    if (pick_freeze) {
        des.fB.resize(n);
        des.fAB.resize(d * n);
    }
    parallel_for(n, [&](std::size_t j) {
        const double* row = u.data() + j * dim;
        std::vector<double> a(d), b(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = dist::quantile(dists[i], row[i]);
        const Evaluation ea = evaluate_at(model, a, j);
        des.fA[j] = ea.value;
        for (std::size_t i = 0; i < d; ++i) des.grad2[i * n + j] = ea.gradient[i] * ea.gradient[i];
        if (!pick_freeze) return;
        for (std::size_t i = 0; i < d; ++i) b[i] = dist::quantile(dists[i], row[d + i]);
        des.fB[j] = evaluate_at(model, b, j).value;
        std::vector<double> hybrid = a;
        for (std::size_t i = 0; i < d; ++i) {
            hybrid[i] = b[i];
            des.fAB[i * n + j] = evaluate_at(model, hybrid, j).value;
            hybrid[i] = a[i];
        }
    });
    return des;
}

// Statistics of one (re)sample, addressed through an index list.
struct Stats {
    std::vector<double> nu;
    std::vector<double> total;
    std::vector<double> bound;
    double D = 0.0;
    bool degenerate = false;
};

bool degenerate_variance(double D, double mean) { return !(D > 1e-13 * std::max(1.0, mean * mean)); }

Stats compute_stats(const Design& des, const std::vector<std::size_t>& idx, const std::vector<double>* constants) {
    const std::size_t n = idx.size(), d = des.d;
    Stats s;
    s.nu.assign(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        double acc = 0.0;
        for (std::size_t j : idx) acc += des.grad2[i * des.n + j];
        s.nu[i] = acc / static_cast<double>(n);
    }
    if (des.fB.empty()) return s;

    double mean = 0.0;
    for (std::size_t j : idx) mean += des.fA[j] + des.fB[j];
    mean /= 2.0 * static_cast<double>(n);
    double var = 0.0;
    for (std::size_t j : idx) {
        const double da = des.fA[j] - mean, db = des.fB[j] - mean;
        var += da * da + db * db;
    }
    s.D = var / (2.0 * static_cast<double>(n) - 1.0);
    s.degenerate = degenerate_variance(s.D, mean);

    s.total.assign(d, 0.0);
    s.bound.assign(d, 0.0);
    if (s.degenerate) return s;
    for (std::size_t i = 0; i < d; ++i) {
        double acc = 0.0;
        for (std::size_t j : idx) {
            const double diff = des.fA[j] - des.fAB[i * des.n + j];
            acc += diff * diff;
        }
        s.total[i] = acc / (2.0 * static_cast<double>(n) * s.D);
        if (constants) s.bound[i] = (*constants)[i] * s.nu[i] / s.D;
    }
    return s;
}

double sample_sd(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

struct BootstrapSd {
    std::vector<double> nu, total, bound;
    double D = 0.0;
};

BootstrapSd bootstrap(const Design& des, const std::vector<double>* constants, const SampleOptions& opt) {
    const std::size_t d = des.d, reps = opt.bootstrap;
    std::vector<std::vector<double>> nu(d), total(d), bound(d);
    std::vector<double> D;
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick(0, des.n - 1);
    std::vector<std::size_t> idx(des.n);
    for (std::size_t r = 0; r < reps; ++r) {
        for (auto& j : idx) j = pick(rng);
        const Stats s = compute_stats(des, idx, constants);
        for (std::size_t i = 0; i < d; ++i) {
            nu[i].push_back(s.nu[i]);
            if (!s.total.empty()) {
                total[i].push_back(s.total[i]);
                bound[i].push_back(s.bound[i]);
            }
        }
        D.push_back(s.D);
    }
    BootstrapSd out;
    for (std::size_t i = 0; i < d; ++i) {
        out.nu.push_back(sample_sd(nu[i]));
        out.total.push_back(sample_sd(total[i]));
        out.bound.push_back(sample_sd(bound[i]));
    }
    out.D = sample_sd(D);
    return out;
}

std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t j = 0; j < n; ++j) idx[j] = j;
    return idx;
}

}  // namespace

std::vector<Estimate> estimate_dgsm(const ModelFunction& model, const std::vector<DistributionSpec>& dists,
                                    const SampleOptions& options) {
    const Design des = run_design(model, dists, options, false);
    const Stats s = compute_stats(des, identity(des.n), nullptr);
    const BootstrapSd sd = bootstrap(des, nullptr, options);
    std::vector<Estimate> out;
    for (std::size_t i = 0; i < des.d; ++i) out.push_back({s.nu[i], sd.nu[i]});
    return out;
}

SobolResult estimate_total_sobol(const ModelFunction& model, const std::vector<DistributionSpec>& dists,
                                 const SampleOptions& options) {
    const Design des = run_design(model, dists, options, true);
    const Stats s = compute_stats(des, identity(des.n), nullptr);
    SobolResult out;
    out.degenerate = s.degenerate;
    const BootstrapSd sd = s.degenerate ? BootstrapSd{} : bootstrap(des, nullptr, options);
    out.variance = {s.D, sd.D};
    for (std::size_t i = 0; i < des.d; ++i) out.total.push_back({s.total[i], s.degenerate ? 0.0 : sd.total[i]});
    return out;
}

double dgsm_upper_bound(double C_i, double nu_i, double D) {
    if (!(D > 0.0)) throw ArgumentError("dgsm_upper_bound: output variance must be positive");
    if (!(C_i > 0.0)) throw ArgumentError("dgsm_upper_bound: Poincaré constant must be positive");
    if (!(nu_i >= 0.0)) throw ArgumentError("dgsm_upper_bound: DGSM must be nonnegative");
    return C_i * nu_i / D;
}

ModelFunction flood_model() {
    ModelFunction m;
    m.dimension = 8;
    m.names = {"Q", "K_s", "Z_v", "Z_m", "H_d", "C_b", "L", "B"};
    m.evaluate = [](std::span<const double> x) {
        const double Q = x[0], Ks = x[1], Zv = x[2], Zm = x[3], Hd = x[4], Cb = x[5], L = x[6], B = x[7];
        if (!(Zm > Zv)) throw DomainError("flood model needs Z_m > Z_v");
        if (!(Q > 0.0 && Ks > 0.0 && B > 0.0 && L > 0.0)) throw DomainError("flood model needs Q, K_s, B, L > 0");
        const double drop = Zm - Zv;
        const double H = std::pow(Q / (B * Ks * std::sqrt(drop / L)), 0.6);
        Evaluation e;
        e.value = H + Zv - Hd - Cb;
        e.gradient = {0.6 * H / Q,          -0.6 * H / Ks, 1.0 + 0.3 * H / drop, -0.3 * H / drop,
                      -1.0,                 -1.0,          0.3 * H / L,          -0.6 * H / B};
        return e;
    };
    return m;
}

std::vector<DistributionSpec> flood_inputs() {
    using dist::Family;
    return {
        DistributionSpec(Family::gumbel, 1013.0, 558.0, Interval{500.0, 3000.0}),
        DistributionSpec(Family::normal, 30.0, 8.0, Interval{15.0, kInf}),
        DistributionSpec(Family::triangular, 50.0, 1.0),
        DistributionSpec(Family::triangular, 55.0, 1.0),
        DistributionSpec(Family::uniform, 8.0, 1.0),
        DistributionSpec(Family::triangular, 55.5, 0.5),
        DistributionSpec(Family::triangular, 5000.0, 10.0),
        DistributionSpec(Family::triangular, 300.0, 5.0),
    };
}

ScreeningReport screening_study(const ModelFunction& model, const std::vector<DistributionSpec>& dists,
                                const SampleOptions& options, double threshold,
                                std::optional<std::vector<double>> constants) {
    const std::size_t d = model.dimension;
    if (dists.size() != d) throw ArgumentError("need one distribution per model input");
    if (!constants) {
        constants.emplace(d);
        std::vector<std::string> failures(d);
        parallel_for(d, [&](std::size_t i) {
            try {
                const auto rep = compute_constant(dists[i], SolveMethod::automatic, 1e-6, false);
                if (rep.estimate)
                    (*constants)[i] = rep.estimate->value;
                else
                    failures[i] = rep.warning;
            } catch (const Error& e) {
                failures[i] = e.what();
            }
        });
        std::string msg;
        for (std::size_t i = 0; i < d; ++i)
            if (!failures[i].empty()) msg += " input " + std::to_string(i) + ": " + failures[i] + ";";
        if (!msg.empty()) throw NumericalError("screening_study: Poincaré constant unavailable for" + msg);
    }
    if (constants->size() != d) throw ArgumentError("need one Poincaré constant per input");

    const Design des = run_design(model, dists, options, true);
    const Stats s = compute_stats(des, identity(des.n), &*constants);
    const BootstrapSd sd = bootstrap(des, &*constants, options);

    ScreeningReport rep;
    rep.D = s.D;
    rep.D_sd = sd.D;
    rep.n = options.n;
    rep.bootstrap = options.bootstrap;
    rep.seed = options.seed;
    rep.sampling = options.sampling;
    rep.threshold = threshold;
    rep.degenerate = s.degenerate;
    for (std::size_t i = 0; i < d; ++i) {
        InputReport in;
        in.name = i < model.names.size() ? model.names[i] : "x" + std::to_string(i + 1);
        in.nu = s.nu[i];
        in.nu_sd = sd.nu[i];
        in.poincare = (*constants)[i];
        if (!s.degenerate) {
            in.total_sobol = s.total[i];
            in.sobol_sd = sd.total[i];
            in.upper_bound = s.bound[i];
            in.bound_sd = sd.bound[i];
        }
        in.active = in.upper_bound >= threshold;
        rep.inputs.push_back(in);
    }
    return rep;
}

}  // namespace poincare::sa
