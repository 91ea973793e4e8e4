#include "fqmzv/mzv.hpp"

#include "fqmzv/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

namespace fqmzv {

namespace {

std::string place_key(const Place& v) {
    std::string k = "v";
    for (FqElem c : v.v.c) {
        k += std::to_string(c.v);
        k += ',';
    }
    return k;
}

std::string index_point_key(const IndexComposition& s, const std::vector<Poly>& u) {
    std::string k = "|s";
    for (int p : s.parts) {
        k += std::to_string(p);
        k += ',';
    }
    k += "|u";
    for (const Poly& p : u) {
        for (FqElem c : p.c) {
            k += std::to_string(c.v);
            k += ',';
        }
        k += ';';
    }
    return k;
}

struct Group {
    IndexComposition idx;
    std::vector<Poly> point;
    Poly coeff; // signed: b * (-1)^{depth-1}
};

// merge triples sharing (index, point), first-occurrence order
std::vector<Group> group_triples(const Fq& F, const std::vector<MzvTriple>& ts) {
    std::vector<Group> gs;
    std::map<std::string, size_t> pos;
    for (const MzvTriple& t : ts) {
        Poly sb = (t.index.depth() - 1) % 2 != 0 ? poly_neg(F, t.b) : t.b;
        std::string key = index_point_key(t.index, t.point);
        auto it = pos.find(key);
        if (it != pos.end()) {
            gs[it->second].coeff = poly_add(F, gs[it->second].coeff, sb);
        } else {
            pos.emplace(std::move(key), gs.size());
            gs.push_back({t.index, t.point, sb});
        }
    }
    return gs;
}

std::string integral_verdict(const VAdic& z) {
    if (z.is_zero_to_prec()) return z.prec >= 0 ? "true" : "unknown";
    return z.ord() >= 0 ? "true" : "false";
}

// monic polynomials of degree d, ascending base-q coefficient key
std::vector<Poly> monics_of_degree(const Fq& F, int d) {
    int64_t q = F.q();
    int64_t count = 1;
    for (int i = 0; i < d; ++i) {
        count *= q;
        if (count > (int64_t(1) << 22)) throw math_error("monics_of_degree: too many polynomials");
    }
    std::vector<Poly> out;
    out.reserve((size_t)count);
    for (int64_t k = 0; k < count; ++k) {
        std::vector<FqElem> cs((size_t)d + 1, F.zero());
        int64_t rem = k;
        for (int i = 0; i < d; ++i) {
            cs[(size_t)i] = F.elem((uint16_t)(rem % q));
            rem /= q;
        }
        cs[(size_t)d] = F.one();
        out.push_back(poly_from_coeffs(F, cs));
    }
    return out;
}

} // namespace

std::vector<MzvTriple> decompose_index(const Fq& F, AndersonThakur& at,
                                       const IndexComposition& s) {
    int r = s.depth();
    if (r < 1) throw std::invalid_argument("decompose_index: empty index");
    if (r > 20) throw math_error("decompose_index: depth out of range");
    std::vector<std::vector<Poly>> cs;
    cs.reserve((size_t)r);
    int64_t total = int64_t(1) << (r - 1);
    for (int p : s.parts) {
        cs.push_back(at.coeffs(p));
        total *= (int64_t)cs.back().size();
        if (total > (int64_t(1) << 22)) throw math_error("decompose_index: expansion too large");
    }
    std::vector<MzvTriple> out;
    std::vector<int> j((size_t)r, 0);
    for (;;) {
        int jsum = 0;
        for (int ji : j) jsum += ji;
        Poly b = poly_shift(poly_one(F), jsum);
        if ((r - 1) % 2 != 0) b = poly_neg(F, b);
        for (int64_t w = 0; w < (int64_t(1) << (r - 1)); ++w) {
            IndexComposition idx;
            std::vector<Poly> pts;
            int cur = s.parts[0];
            Poly pt = cs[0][(size_t)j[0]];
            for (int g = 1; g < r; ++g) {
                bool merge = (w >> (r - 1 - g)) & 1;
                if (merge) {
                    cur += s.parts[(size_t)g];
                    pt = poly_mul(F, pt, cs[(size_t)g][(size_t)j[(size_t)g]]);
                } else {
                    idx.parts.push_back(cur);
                    pts.push_back(pt);
                    cur = s.parts[(size_t)g];
                    pt = cs[(size_t)g][(size_t)j[(size_t)g]];
                }
            }
            idx.parts.push_back(cur);
            pts.push_back(pt);
            out.push_back({b, std::move(idx), std::move(pts)});
        }
        // odometer: last coordinate fastest
        int pos = r - 1;
        while (pos >= 0) {
            if (j[(size_t)pos] < (int)cs[(size_t)pos].size() - 1) {
                ++j[(size_t)pos];
                break;
            }
            j[(size_t)pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

VAdic Evaluator::li_star(LocalField& K, const IndexComposition& s, const std::vector<Poly>& u,
                         int64_t prec) {
    std::string key = place_key(K.place()) + index_point_key(s, u);
    auto it = cache_.find(key);
    if (it != cache_.end() && it->second.prec >= prec) return it->second;
    VAdic val = cmspl_v(K, s, u, prec);
    cache_[key] = val;
    return val;
}

ZetaVResult Evaluator::zeta_v(LocalField& K, const IndexComposition& s, int64_t prec) {
    const Fq& F = *F_;
    if (s.depth() < 1) throw std::invalid_argument("zeta_v: empty index");
    if (prec < 1) throw std::invalid_argument("zeta_v: precision must be positive");
    Poly gamma = tab_.gamma_index(s);
    int64_t g = ord_exact(F, gamma, K.place());
    std::vector<Group> groups = group_triples(F, decompose_index(F, at_, s));
    MzvBound mb = mzv_bound(s, K.place());
    int64_t extra = 0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        int64_t np = prec + g + extra;
        VAdic total = K.exact_zero();
        for (const Group& grp : groups) {
            if (grp.coeff.is_zero()) continue;
            VAdic li = li_star(K, grp.idx, grp.point, np);
            total = K.add(total, K.mul_poly(li, grp.coeff));
        }
        VAdic zeta = K.div(total, K.from_poly(gamma, np + g + 8));
        if (zeta.prec >= prec) {
            ZetaVResult res;
            res.value = zeta;
            res.bound = mb.bound;
            res.criterion = mb.criterion;
            res.integral = integral_verdict(zeta);
            return res;
        }
        extra = extra ? extra * 2 : 8;
    }
    throw math_error("zeta_v: precision did not stabilize");
}

InfAdic Evaluator::zeta_inf_cmspl(InfField& K, const IndexComposition& s, int64_t prec) {
    const Fq& F = *F_;
    if (s.depth() < 1) throw std::invalid_argument("zeta_inf_cmspl: empty index");
    if (prec < 1) throw std::invalid_argument("zeta_inf_cmspl: precision must be positive");
    Poly gamma = tab_.gamma_index(s);
    int64_t dg = gamma.deg(); // division by gamma gains dg digits
    std::vector<Group> groups = group_triples(F, decompose_index(F, at_, s));
    int64_t bmax = 0;
    for (const Group& grp : groups)
        if (!grp.coeff.is_zero()) bmax = std::max<int64_t>(bmax, grp.coeff.deg());
    int64_t extra = 0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        int64_t np = std::max<int64_t>(1, prec + bmax - dg + extra);
        InfAdic total = K.exact_zero();
        for (const Group& grp : groups) {
            if (grp.coeff.is_zero()) continue;
            InfAdic li = cmspl_inf(K, grp.idx, grp.point, np);
            total = K.add(total, K.mul(li, K.from_poly(grp.coeff, kExactPrec - 1)));
        }
        InfAdic zeta = K.div(total, K.from_poly(gamma, kExactPrec - 1));
        if (zeta.prec >= prec) return zeta;
        extra = extra ? extra * 2 : 8;
    }
    throw math_error("zeta_inf_cmspl: precision did not stabilize");
}

InfAdic zeta_inf_series(InfField& K, const IndexComposition& s, int64_t prec) {
    const Fq& F = K.field();
    int r = s.depth();
    if (r < 1) throw std::invalid_argument("zeta_inf_series: empty index");
    if (prec < 1) throw std::invalid_argument("zeta_inf_series: precision must be positive");
    // a tuple led by degree d contributes ord >= s_1 d
    int dmax = (int)((prec - 1) / s.parts[0]);
    int64_t w = prec + 4;
    // power sums S_d(k) = sum_{a monic, deg a = d} a^{-k}
    std::map<std::pair<int, int>, InfAdic> psums;
    auto power_sum = [&](int d, int k) -> const InfAdic& {
        auto it = psums.find({d, k});
        if (it != psums.end()) return it->second;
        InfAdic sum = K.exact_zero();
        for (const Poly& a : monics_of_degree(F, d))
            sum = K.add(sum, K.pow(K.inv(K.from_poly(a, w)), k));
        return psums.emplace(std::make_pair(d, k), std::move(sum)).first->second;
    };
    // suffix[d] = sum over tuples below level j starting at degree d
    std::vector<InfAdic> suffix((size_t)dmax + 1, K.exact_zero());
    for (int jlev = r; jlev >= 1; --jlev) {
        std::vector<InfAdic> next((size_t)dmax + 1, K.exact_zero());
        InfAdic below = K.exact_zero(); // sum of suffix[d'] for d' < d
        for (int d = 0; d <= dmax; ++d) {
            if (jlev == r) {
                next[(size_t)d] = power_sum(d, s.parts[(size_t)(jlev - 1)]);
            } else {
                if (d > 0) below = K.add(below, suffix[(size_t)(d - 1)]);
                if (d == 0) continue; // needs a strictly smaller degree below
                next[(size_t)d] = K.mul(power_sum(d, s.parts[(size_t)(jlev - 1)]), below);
            }
        }
        suffix = std::move(next);
    }
    InfAdic total = K.zero_to_prec(prec);
    for (int d = 0; d <= dmax; ++d) total = K.add(total, suffix[(size_t)d]);
    return total;
}

Poly finite_zeta(const Fq& F, const Place& v, const IndexComposition& s) {
    int r = s.depth();
    if (r < 1) throw std::invalid_argument("finite_zeta: empty index");
    if (r > v.eps) return poly_zero();
    std::map<std::pair<int, int>, Poly> psums;
    auto power_sum = [&](int d, int k) -> const Poly& {
        auto it = psums.find({d, k});
        if (it != psums.end()) return it->second;
        Poly sum = poly_zero();
        for (const Poly& a : monics_of_degree(F, d))
            sum = poly_mod(F, poly_add(F, sum, poly_powmod(F, poly_inverse_mod(F, a, v.v), k, v.v)),
                           v.v);
        return psums.emplace(std::make_pair(d, k), std::move(sum)).first->second;
    };
    int dmax = v.eps - 1;
    std::vector<Poly> suffix((size_t)dmax + 1, poly_zero());
    for (int jlev = r; jlev >= 1; --jlev) {
        std::vector<Poly> next((size_t)dmax + 1, poly_zero());
        Poly below = poly_zero();
        for (int d = 0; d <= dmax; ++d) {
            if (jlev == r) {
                next[(size_t)d] = power_sum(d, s.parts[(size_t)(jlev - 1)]);
            } else {
                if (d > 0) below = poly_add(F, below, suffix[(size_t)(d - 1)]);
                if (d == 0) continue;
                next[(size_t)d] = poly_mod(F, poly_mul(F, power_sum(d, s.parts[(size_t)(jlev - 1)]), below), v.v);
            }
        }
        suffix = std::move(next);
    }
    Poly total = poly_zero();
    for (int d = 0; d <= dmax; ++d) total = poly_add(F, total, suffix[(size_t)d]);
    return poly_mod(F, total, v.v);
}

namespace {

void finite_zeta_rec(const Fq& F, const Place& v, const IndexComposition& s,
                     const std::vector<std::vector<Poly>>& monics, int level, int deg_bound,
                     const Poly& acc, Poly& total) {
    int r = s.depth();
    for (int d = 0; d < deg_bound; ++d) {
        for (const Poly& a : monics[(size_t)d]) {
            Poly term = poly_mod(
                F,
                poly_mul(F, acc,
                         poly_powmod(F, poly_inverse_mod(F, a, v.v),
                                     s.parts[(size_t)(level - 1)], v.v)),
                v.v);
            if (level == r)
                total = poly_mod(F, poly_add(F, total, term), v.v);
            else
                finite_zeta_rec(F, v, s, monics, level + 1, d, term, total);
        }
    }
}

} // namespace

Poly finite_zeta_direct(const Fq& F, const Place& v, const IndexComposition& s) {
    int r = s.depth();
    if (r < 1) throw std::invalid_argument("finite_zeta_direct: empty index");
    if (r > v.eps) return poly_zero();
    std::vector<std::vector<Poly>> monics;
    for (int d = 0; d < v.eps; ++d) monics.push_back(monics_of_degree(F, d));
    Poly total = poly_zero();
    finite_zeta_rec(F, v, s, monics, 1, v.eps, poly_one(F), total);
    return total;
}

std::vector<ScanRow> adelic_scan(const Fq& F, const IndexComposition& s, int max_deg,
                                 int64_t prec, int jobs, int64_t degree_budget) {
    std::vector<Place> places = enumerate_places(F, max_deg);
    std::vector<ScanRow> rows(places.size());
    for (size_t i = 0; i < places.size(); ++i) rows[i].v = places[i];
    auto work = [&](size_t i, Evaluator& ev) {
        try {
            LocalField K(F, places[i]);
            rows[i].res = ev.zeta_v(K, s, prec);
            rows[i].ok = true;
        } catch (const std::exception& e) {
            rows[i].ok = false;
            rows[i].message = e.what();
        }
    };
    if (jobs <= 1) {
        Evaluator ev(F, degree_budget);
        for (size_t i = 0; i < places.size(); ++i) work(i, ev);
    } else {
        std::atomic<size_t> next{0};
        size_t nthreads = std::min<size_t>((size_t)jobs, places.size());
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                Evaluator ev(F, degree_budget);
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= places.size()) break;
                    work(i, ev);
                }
            });
        for (std::thread& th : pool) th.join();
    }
    return rows;
}

} // namespace fqmzv
