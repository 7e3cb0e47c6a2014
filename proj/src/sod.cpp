#include "dtpt/sod.hpp"

#include "dtpt/zonotope.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtpt {

MuParam mu_parse(const std::string& s) {
    MuParam mu;
    std::string body = s;
    if (s.size() >= 4) {
        std::string tail = s.substr(s.size() - 4);
        if (tail == "+eps") {
            mu.eps_sign = +1;
            body = s.substr(0, s.size() - 4);
        } else if (tail == "-eps") {
            mu.eps_sign = -1;
            body = s.substr(0, s.size() - 4);
        }
    }
    mu.base = rat_parse(body);
    return mu;
}

std::string mu_str(const MuParam& mu) {
    std::string out = rat_str(mu.base);
    if (mu.eps_sign > 0) out += "+eps";
    if (mu.eps_sign < 0) out += "-eps";
    return out;
}

EpsRational mu_value(const MuParam& mu) { return EpsRational(mu.base, Rational(mu.eps_sign)); }

bool check_generic(const MuParam& mu, long d) {
    if (d < 1) throw std::invalid_argument("check_generic needs d >= 1");
    if (mu.eps_sign != 0) return true;
    for (long l = 1; l <= d; ++l)
        if (is_integer(Rational(2 * l) * mu.base)) return false;
    return true;
}

namespace {

long block_offset(const std::vector<long>& d_parts, long d_prime, size_t i) {
    long off = d_prime;
    for (size_t j = 0; j < d_parts.size(); ++j) {
        if (j > i) off += d_parts[j];
        if (j < i) off -= d_parts[j];
    }
    return off;
}

}  // namespace

std::vector<long> v_from_w(const std::vector<long>& w, const std::vector<long>& d_parts, long d_prime) {
    if (w.size() != d_parts.size()) throw std::invalid_argument("length mismatch in v_from_w");
    std::vector<long> v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[i] = w[i] + d_parts[i] * block_offset(d_parts, d_prime, i);
    return v;
}

std::vector<long> w_from_v(const std::vector<long>& v, const std::vector<long>& d_parts, long d_prime) {
    if (v.size() != d_parts.size()) throw std::invalid_argument("length mismatch in w_from_v");
    std::vector<long> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] - d_parts[i] * block_offset(d_parts, d_prime, i);
    return w;
}

namespace {

// Smallest integer n with n >= x (or n > x when strict).
long int_at_least(const EpsRational& x, bool strict) {
    if (is_integer(x.a)) {
        long n = long(x.a.get_num().get_si());
        bool ok = strict ? (x.b < 0) : (x.b <= 0);
        return ok ? n : n + 1;
    }
    return long(rat_ceil(x.a).get_si());
}

// Largest integer n with n <= x (or n < x when strict).
long int_at_most(const EpsRational& x, bool strict) {
    if (is_integer(x.a)) {
        long n = long(x.a.get_num().get_si());
        bool ok = strict ? (x.b > 0) : (x.b >= 0);
        return ok ? n : n - 1;
    }
    return long(rat_floor(x.a).get_si());
}

struct SlopeInterval {
    EpsRational lo, hi;
    bool strict = false;  // both endpoints excluded in open mode

    bool admits(const Rational& slope) const {
        EpsRational s((slope));
        if (strict) return lo < s && s < hi;
        return lo <= s && s <= hi;
    }
};

void enumerate_parts(long remaining, const SlopeInterval& iv, bool have_prev, const Rational& prev_slope,
                     std::vector<std::pair<long, long>>& cur,
                     std::vector<std::vector<std::pair<long, long>>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (long d1 = 1; d1 <= remaining; ++d1) {
        long vmin = int_at_least(iv.lo * Rational(d1), iv.strict);
        if (have_prev) {
            EpsRational above(prev_slope * Rational(d1));
            vmin = std::max(vmin, int_at_least(above, /*strict=*/true));
        }
        long vmax = int_at_most(iv.hi * Rational(d1), iv.strict);
        for (long v = vmin; v <= vmax; ++v) {
            cur.emplace_back(d1, v);
            enumerate_parts(remaining - d1, iv, true, rat(v, d1), cur, out);
            cur.pop_back();
        }
    }
}

bool canonical_less(const SummandDescriptor& x, const SummandDescriptor& y) {
    if (x.d_prime != y.d_prime) return x.d_prime > y.d_prime;
    auto key = [](const SummandPart& p) { return std::tuple<long, long, long>(p.d, p.w, p.v); };
    return std::lexicographical_compare(x.parts.begin(), x.parts.end(), y.parts.begin(), y.parts.end(),
                                        [&](const SummandPart& a, const SummandPart& b) { return key(a) < key(b); });
}

}  // namespace

std::vector<SummandDescriptor> enumerate_summands(long d, long r, long a, const MuParam& mu,
                                                  BoundsMode mode) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    if (r < 1 || a < 0) throw std::invalid_argument("invalid r or a");
    if (mode == BoundsMode::Open && d >= 1 && !check_generic(mu, d))
        throw std::invalid_argument("open bounds need generic mu: " + mu_str(mu));

    EpsRational muv = mu_value(mu);
    SlopeInterval iv;
    iv.lo = EpsRational(rat(-2 * r - a, 2)) - muv;
    iv.hi = EpsRational(rat(-a, 2)) - muv;
    iv.strict = (mode == BoundsMode::Open);

    std::vector<SummandDescriptor> out;
    for (long d_prime = d; d_prime >= 0; --d_prime) {
        std::vector<std::vector<std::pair<long, long>>> lists;
        std::vector<std::pair<long, long>> cur;
        enumerate_parts(d - d_prime, iv, false, Rational(0), cur, lists);
        for (const auto& list : lists) {
            std::vector<long> dp, vp;
            for (const auto& [dd, vv] : list) {
                dp.push_back(dd);
                vp.push_back(vv);
            }
            std::vector<long> wp = w_from_v(vp, dp, d_prime);
            SummandDescriptor desc;
            desc.d_prime = d_prime;
            for (size_t i = 0; i < dp.size(); ++i) desc.parts.push_back({dp[i], wp[i], vp[i]});
            out.push_back(std::move(desc));
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

namespace {

void compositions_rec(long e, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = 1; p <= e; ++p) {
        cur.push_back(p);
        compositions_rec(e - p, cur, out);
        cur.pop_back();
    }
}

long coord_sum(const WeightVec& w) {
    Rational s(0);
    for (const auto& c : w) s += c;
    if (!is_integer(s)) throw std::logic_error("non-integral weight sum");
    return long(s.get_num().get_si());
}

}  // namespace

std::vector<WeightDecomposition> decompose_weight(const WeightVec& chi, long d, long a, long r,
                                                  const MuParam& mu) {
    if (long(chi.size()) != d) throw std::invalid_argument("chi has wrong length");
    if (d < 0 || a < 0 || r < 1) throw std::invalid_argument("invalid parameters");
    for (const auto& c : chi)
        if (!is_integer(c)) throw std::invalid_argument("chi must be integral");
    if (!is_dominant(chi)) throw std::invalid_argument("chi must be dominant");

    EpsRational muv = mu_value(mu);
    if (d >= 1 && !window_D(chi, d, a, r, muv))
        throw std::invalid_argument("chi + rho + delta lies outside the big window");

    // Coordinates of admissible chi are bounded by the window generators;
    // the documented search box is 3d/2 + r + a/2 + |mu| + d.
    Rational box = rat(3 * d, 2) + Rational(r) + rat(a, 2) + abs(mu.base) + Rational(d);
    for (const auto& c : chi)
        if (abs(c) > box) throw std::logic_error("admissible weight escaped the search box");

    SlopeInterval bounds;
    bounds.lo = EpsRational(rat(-2 * r - a, 2)) - muv;
    bounds.hi = EpsRational(rat(-a, 2)) - muv;
    bounds.strict = false;

    std::vector<WeightDecomposition> found;
    for (long d_prime = d; d_prime >= 0; --d_prime) {
        long e = d - d_prime;
        std::vector<std::vector<long>> comps;
        std::vector<long> cur;
        compositions_rec(e, cur, comps);
        for (const auto& dp : comps) {
            // Consecutive blocks d_1, ..., d_k, then the final d' block.
            std::vector<WeightVec> blocks;
            long off = 0;
            for (long di : dp) {
                blocks.emplace_back(chi.begin() + off, chi.begin() + off + di);
                off += di;
            }
            WeightVec chi_prime(chi.begin() + off, chi.end());

            std::vector<long> wp;
            for (const auto& b : blocks) wp.push_back(coord_sum(b));
            std::vector<long> vp = v_from_w(wp, dp, d_prime);

            bool ok = true;
            Rational prev;
            for (size_t i = 0; i < dp.size() && ok; ++i) {
                Rational slope = rat(vp[i], dp[i]);
                if (!bounds.admits(slope)) ok = false;
                if (i > 0 && !(slope > prev)) ok = false;
                prev = slope;
            }
            for (size_t i = 0; i < dp.size() && ok; ++i)
                if (!window_M_slice(blocks[i], dp[i], wp[i])) ok = false;
            if (ok && d_prime >= 1) {
                const auto sw = special_weights(d_prime);
                EpsRational shift = muv - EpsRational(Rational(e));
                EpsWeightVec point = add_eps(add(chi_prime, sw.rho), scale(sw.sigma, shift));
                if (!contains_eps(zono_Wa(d_prime, a), point).feasible) ok = false;
            }
            if (!ok) continue;

            WeightDecomposition dec;
            dec.summand.d_prime = d_prime;
            for (size_t i = 0; i < dp.size(); ++i) dec.summand.parts.push_back({dp[i], wp[i], vp[i]});
            dec.chi_blocks = blocks;
            dec.chi_prime = chi_prime;
            found.push_back(std::move(dec));
        }
    }
    std::sort(found.begin(), found.end(), [](const WeightDecomposition& x, const WeightDecomposition& y) {
        return canonical_less(x.summand, y.summand);
    });
    return found;
}

}  // namespace dtpt
