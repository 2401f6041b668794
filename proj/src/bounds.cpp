#include "batchcodes/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

#include "batchcodes/errors.hpp"

namespace batchcodes {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_positive(std::size_t v, const char* name) {
    if (v == 0) throw InvalidArgument(std::string(name) + " must be at least 1");
}

cpp_int binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    cpp_int out = 1;
    for (std::size_t i = 0; i < r; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

cpp_int factorial(std::size_t n) {
    cpp_int out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= i;
    return out;
}

// (r beta - beta - r + 2), signed.
std::int64_t systematic_denominator(std::size_t r, std::size_t beta) {
    return as_signed(r) * as_signed(beta) - as_signed(beta) - as_signed(r) + 2;
}

BoundVerdict lower_bound(std::string name, std::int64_t rhs, std::optional<std::size_t> n) {
    BoundVerdict v;
    v.name = std::move(name);
    v.kind = BoundKind::lower_bound_on_n;
    v.applicable = true;
    v.rhs = rhs;
    if (n) {
        v.satisfied = as_signed(*n) >= rhs;
        v.attained = as_signed(*n) == rhs;
    }
    return v;
}

BoundVerdict not_applicable(std::string name, BoundKind kind, std::string reason) {
    BoundVerdict v;
    v.name = std::move(name);
    v.kind = kind;
    v.applicable = false;
    v.reason = std::move(reason);
    return v;
}

BoundVerdict plotkin_verdict(std::size_t n, std::size_t k, std::size_t t, std::size_t q) {
    const PlotkinVerdict p = plotkin_batch(n, k, t, q);
    if (!p.applicable) {
        return not_applicable("plotkin_batch", BoundKind::cardinality_cap, "q*t <= (q-1)*n");
    }
    BoundVerdict v;
    v.name = "plotkin_batch";
    v.kind = BoundKind::cardinality_cap;
    v.applicable = true;
    v.rhs = p.cap;
    v.satisfied = p.holds;
    v.attained = p.attained;
    v.parameters = {{"n", as_signed(n)}, {"k", as_signed(k)}, {"t", as_signed(t)}, {"q", as_signed(q)}};
    return v;
}

// Bounds that depend on the query size t and set-size cap r.
void append_batch_bounds(std::vector<BoundVerdict>& out, std::size_t k, std::size_t d, std::size_t r, std::size_t t,
                         bool systematic, std::optional<std::size_t> n, std::optional<SizeCap> cap) {
    const std::map<std::string, std::int64_t> base_params = {
        {"k", as_signed(k)}, {"d", as_signed(d)}, {"r", as_signed(r)}, {"t", as_signed(t)}};
    auto tag = [&](BoundVerdict v) {
        v.cap = cap;
        v.parameters.insert(base_params.begin(), base_params.end());
        out.push_back(std::move(v));
    };

    tag(lower_bound("zs_base", zs_base(k, d, r, t), n));

    const MaximizedBound best = zs_best(k, d, r, t);
    BoundVerdict best_v = lower_bound("zs_best", best.rhs, n);
    best_v.parameters["beta"] = as_signed(best.beta);
    tag(std::move(best_v));

    if (!systematic) {
        tag(not_applicable("zs_systematic", BoundKind::lower_bound_on_n, "code is not systematic"));
    } else if (t < 2) {
        tag(not_applicable("zs_systematic", BoundKind::lower_bound_on_n, "requires t >= 2"));
    } else {
        const MaximizedBound sys = zs_systematic(k, d, r, t);
        BoundVerdict sys_v = lower_bound("zs_systematic", sys.rhs, n);
        sys_v.parameters["beta"] = as_signed(sys.beta);
        tag(std::move(sys_v));
    }

    const RefinedBound refined = zs_refined(k, d, r, t);
    if (!refined.applicable) {
        tag(not_applicable("zs_refined", BoundKind::lower_bound_on_n, refined.reason));
    } else {
        BoundVerdict ref_v = lower_bound("zs_refined", refined.rhs, n);
        ref_v.parameters["beta"] = as_signed(refined.beta);
        ref_v.parameters["epsilon"] = as_signed(refined.epsilon);
        ref_v.parameters["lambda"] = as_signed(refined.lambda);
        tag(std::move(ref_v));
    }
}

}  // namespace

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw InvalidArgument("ceil_div requires a positive divisor");
    if (a >= 0) return (a + b - 1) / b;
    return -((-a) / b);
}

std::int64_t singleton(std::size_t k, std::size_t d) {
    require_positive(k, "k");
    require_positive(d, "d");
    return as_signed(k) + as_signed(d) - 1;
}

std::int64_t gopalan_lrc(std::size_t k, std::size_t d, std::size_t r) {
    require_positive(k, "k");
    require_positive(d, "d");
    require_positive(r, "r");
    return as_signed(k) + as_signed(d) + ceil_div(as_signed(k), as_signed(r)) - 2;
}

std::int64_t wang_zhang(std::size_t k, std::size_t d, std::size_t r, std::size_t delta) {
    require_positive(k, "k");
    require_positive(d, "d");
    require_positive(r, "r");
    require_positive(delta, "delta");
    const std::int64_t num = as_signed(delta) * (as_signed(k) - 1) + 1;
    const std::int64_t den = as_signed(delta) * (as_signed(r) - 1) + 1;
    return as_signed(k) + as_signed(d) + ceil_div(num, den) - 2;
}

PlotkinVerdict plotkin_batch(std::size_t n, std::size_t k, std::size_t t, std::size_t q) {
    if (q < 2) throw InvalidArgument("field size q must be at least 2");
    PlotkinVerdict v;
    const cpp_int qt = cpp_int(q) * t;
    const cpp_int spread = cpp_int(q - 1) * n;
    if (qt <= spread) return v;
    v.applicable = true;
    const cpp_int cap = qt / (qt - spread);
    v.cap = static_cast<std::int64_t>(cap);
    const cpp_int size = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(k));
    v.holds = size <= cap;
    v.attained = size == cap;
    return v;
}

std::int64_t zs_base(std::size_t k, std::size_t d, std::size_t r, std::size_t t) {
    require_positive(r, "r");
    require_positive(t, "t");
    const std::int64_t den = as_signed(r) * as_signed(t) - as_signed(t) + 1;
    return as_signed(k) + as_signed(d) + (as_signed(t) - 1) * (ceil_div(as_signed(k), den) - 1) - 1;
}

MaximizedBound zs_best(std::size_t k, std::size_t d, std::size_t r, std::size_t t) {
    require_positive(t, "t");
    MaximizedBound best{zs_base(k, d, r, 1), 1};
    for (std::size_t beta = 2; beta <= t; ++beta) {
        const std::int64_t value = zs_base(k, d, r, beta);
        if (value > best.rhs) best = {value, beta};
    }
    return best;
}

MaximizedBound zs_systematic(std::size_t k, std::size_t d, std::size_t r, std::size_t t) {
    require_positive(r, "r");
    if (t < 2) throw NotApplicable("systematic bound requires t >= 2");
    std::optional<MaximizedBound> best;
    for (std::size_t beta = 2; beta <= t; ++beta) {
        const std::int64_t den = systematic_denominator(r, beta);
        if (den < 1) continue;
        const std::int64_t term = (as_signed(beta) - 1) * (ceil_div(as_signed(k), den) - 1);
        if (!best || term > best->rhs) best = MaximizedBound{term, beta};
    }
    if (!best) throw NotApplicable("no beta in [2, t] has a positive denominator");
    best->rhs += as_signed(k) + as_signed(d) - 1;
    return *best;
}

RefinedBound zs_refined(std::size_t k, std::size_t d, std::size_t r, std::size_t t) {
    RefinedBound out;
    if (r < 2) {
        out.reason = "requires r >= 2 (beta range divides by 2(r-1))";
        return out;
    }
    if (t < 1) {
        out.reason = "requires t >= 1";
        return out;
    }
    const std::int64_t K = as_signed(k);
    const std::int64_t R = as_signed(r);
    const std::int64_t T = as_signed(t);
    const std::int64_t D = as_signed(d);
    if (K < 2 * (R * T - T + 1) + 1) {
        out.reason = "requires k >= 2(rt-t+1)+1";
        return out;
    }
    const std::int64_t beta_max = std::min<std::int64_t>(T, (K - 3) / (2 * (R - 1)));
    const std::int64_t pairs = K * (K - 1) / 2;
    bool found = false;
    for (std::int64_t beta = 1; beta <= beta_max; ++beta) {
        const std::int64_t span = R * beta - beta;
        const std::int64_t den = R * beta - beta + 1;
        for (std::int64_t eps = 1; eps <= span; ++eps) {
            for (std::int64_t lam = 1; lam <= span; ++lam) {
                const std::int64_t a = K + D + (beta - 1) * (ceil_div(K + eps, den) - 1) - 1;
                const std::int64_t b = K + D + (beta - 1) * (ceil_div(K + lam, den) - 1) - 1;
                const std::int64_t c = (R * beta - lam + 1) * K - pairs * (eps - 1);
                const std::int64_t value = std::min({a, b, c});
                if (!found || value > out.rhs) {
                    found = true;
                    out.rhs = value;
                    out.beta = static_cast<std::size_t>(beta);
                    out.epsilon = static_cast<std::size_t>(eps);
                    out.lambda = static_cast<std::size_t>(lam);
                }
            }
        }
    }
    if (!found) {
        out.reason = "empty (beta, epsilon, lambda) grid";
        return out;
    }
    out.applicable = true;
    return out;
}

std::int64_t redundancy_log_factor(std::size_t k, std::size_t h) {
    if (h < 2) throw InvalidArgument("log factor needs floor(t/2) >= 2");
    // ceil(log N / log(b/(b-a))) with h!/h^h = a/b is the least m >= 0 with
    // b^m >= N (b-a)^m; the log base cancels.
    const cpp_int choices = binomial(k, h);
    const cpp_int a = factorial(h);
    const cpp_int b = boost::multiprecision::pow(cpp_int(h), static_cast<unsigned>(h));
    const cpp_int rest = b - a;
    if (choices <= 1) return 0;
    cpp_int lhs = 1;
    cpp_int rhs = choices;
    std::int64_t m = 0;
    while (lhs < rhs) {
        lhs *= b;
        rhs *= rest;
        ++m;
    }
    return m;
}

std::int64_t redundancy_bound(std::size_t k, std::size_t t, const RedundancyTable& r_pir) {
    require_positive(k, "k");
    require_positive(t, "t");
    auto lookup = [&](std::size_t kk, std::size_t tt) -> std::int64_t {
        const auto it = r_pir.find({kk, tt});
        if (it == r_pir.end()) {
            throw InsufficientData("missing r_P(" + std::to_string(kk) + ", " + std::to_string(tt) + ")");
        }
        return as_signed(it->second);
    };
    const std::int64_t first = lookup(k, t);
    const std::size_t h = t / 2;
    if (h <= 1) return first;
    const std::int64_t factor = redundancy_log_factor(k, h);
    const std::size_t reduced_k = (k + h - 1) / h;
    return first + as_signed(h) * factor * lookup(reduced_k, t - 2);
}

std::vector<BoundVerdict> evaluate_all(const CodeProfile& profile, const BoundOptions& options) {
    std::vector<BoundVerdict> out;
    const std::size_t n = profile.n;
    const std::size_t k = profile.k;
    const std::size_t d = profile.d;

    BoundVerdict single = lower_bound("singleton", singleton(k, d), n);
    single.parameters = {{"k", as_signed(k)}, {"d", as_signed(d)}};
    out.push_back(std::move(single));

    if (profile.all_symbol_locality && *profile.all_symbol_locality >= 1) {
        const std::size_t r = *profile.all_symbol_locality;
        BoundVerdict g = lower_bound("gopalan_lrc", gopalan_lrc(k, d, r), n);
        g.parameters = {{"k", as_signed(k)}, {"d", as_signed(d)}, {"r", as_signed(r)}};
        out.push_back(std::move(g));
    } else {
        out.push_back(not_applicable("gopalan_lrc", BoundKind::lower_bound_on_n,
                                     "some coded symbol is not recoverable from the others"));
    }

    for (const CapProfile& entry : profile.caps) {
        const std::size_t r = entry.cap.value_or(n);

        if (entry.cap.bounded()) {
            // Locality <= r holds exactly when every coded symbol has a set within the cap.
            if (entry.all_symbol_availability >= 1) {
                BoundVerdict g = lower_bound("gopalan_lrc", gopalan_lrc(k, d, r), n);
                g.cap = entry.cap;
                g.parameters = {{"k", as_signed(k)}, {"d", as_signed(d)}, {"r", as_signed(r)}};
                out.push_back(std::move(g));

                const std::size_t delta = entry.all_symbol_availability;
                BoundVerdict wz = lower_bound("wang_zhang", wang_zhang(k, d, r, delta), n);
                wz.cap = entry.cap;
                wz.parameters = {
                    {"k", as_signed(k)}, {"d", as_signed(d)}, {"r", as_signed(r)}, {"delta", as_signed(delta)}};
                out.push_back(std::move(wz));
            } else {
                for (const char* name : {"gopalan_lrc", "wang_zhang"}) {
                    BoundVerdict v = not_applicable(name, BoundKind::lower_bound_on_n,
                                                    "some coded symbol has no recovery set within the cap");
                    v.cap = entry.cap;
                    out.push_back(std::move(v));
                }
            }
        }

        if (entry.batch_t == 0) {
            for (const char* name : {"plotkin_batch", "zs_base", "zs_best", "zs_systematic", "zs_refined"}) {
                BoundVerdict v = not_applicable(name,
                                                std::string(name) == "plotkin_batch" ? BoundKind::cardinality_cap
                                                                                     : BoundKind::lower_bound_on_n,
                                                "batch_t is 0 under this cap");
                v.cap = entry.cap;
                out.push_back(std::move(v));
            }
            continue;
        }

        BoundVerdict p = plotkin_verdict(n, k, entry.batch_t, options.q);
        p.cap = entry.cap;
        out.push_back(std::move(p));
        append_batch_bounds(out, k, d, r, entry.batch_t, profile.systematic, n, entry.cap);
    }
    return out;
}

std::vector<BoundVerdict> evaluate_parameters(const BoundInputs& in) {
    require_positive(in.k, "k");
    require_positive(in.d, "d");
    require_positive(in.r, "r");
    require_positive(in.t, "t");
    std::vector<BoundVerdict> out;
    const std::map<std::string, std::int64_t> kd = {{"k", as_signed(in.k)}, {"d", as_signed(in.d)}};

    BoundVerdict single = lower_bound("singleton", singleton(in.k, in.d), in.n);
    single.parameters = kd;
    out.push_back(std::move(single));

    BoundVerdict g = lower_bound("gopalan_lrc", gopalan_lrc(in.k, in.d, in.r), in.n);
    g.parameters = kd;
    g.parameters["r"] = as_signed(in.r);
    out.push_back(std::move(g));

    if (in.delta) {
        require_positive(*in.delta, "delta");
        BoundVerdict wz = lower_bound("wang_zhang", wang_zhang(in.k, in.d, in.r, *in.delta), in.n);
        wz.parameters = kd;
        wz.parameters["r"] = as_signed(in.r);
        wz.parameters["delta"] = as_signed(*in.delta);
        out.push_back(std::move(wz));
    } else {
        out.push_back(not_applicable("wang_zhang", BoundKind::lower_bound_on_n, "availability delta not given"));
    }

    if (in.n) {
        out.push_back(plotkin_verdict(*in.n, in.k, in.t, in.q));
    } else {
        out.push_back(not_applicable("plotkin_batch", BoundKind::cardinality_cap, "length n not given"));
    }

    append_batch_bounds(out, in.k, in.d, in.r, in.t, in.systematic, in.n, SizeCap::at_most(in.r));
    return out;
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::lower_bound_on_n:
            return "lower_bound_on_n";
        case BoundKind::cardinality_cap:
            return "cardinality_cap";
    }
    return "unknown";
}

}  // namespace batchcodes
