#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fqmzv/errors.hpp"
#include "fqmzv/format.hpp"
#include "fqmzv/mzv.hpp"

#include <vector>

using namespace fqmzv;

namespace {

Poly P(const Fq& F, const std::string& s) { return parse_poly_theta(F, s); }

std::vector<Poly> monics_of(const Fq& F, int d) {
    std::vector<Poly> out;
    int64_t count = 1;
    for (int k = 0; k < d; ++k) count *= F.q();
    for (int64_t m = 0; m < count; ++m) {
        std::vector<FqElem> c;
        int64_t t = m;
        for (int k = 0; k < d; ++k) {
            c.push_back(F.from_int((int)(t % F.q())));
            t /= F.q();
        }
        c.push_back(F.one());
        out.push_back(poly_from_coeffs(F, c));
    }
    return out;
}

std::string triple_str(const Fq& F, const MzvTriple& t) {
    std::string s = poly_to_string(F, t.b) + " | " + index_to_string(t.index.parts) + " |";
    for (const Poly& p : t.point) s += " " + poly_to_string(F, p);
    return s;
}

} // namespace

TEST_CASE("reduction triples for the non-integral witness") {
    Fq F(2, 1);
    Evaluator ev(F);
    auto ts = decompose_index(F, ev.at(), IndexComposition{{4, 1}});
    REQUIRE(ts.size() == 6);
    // digit tuples ascend with the first coordinate most significant and
    // each tuple expands into the no-merge and merge words in order
    CHECK(triple_str(F, ts[0]) == "1 | 4,1 | 0 1");
    CHECK(triple_str(F, ts[1]) == "1 | 5 | 0");
    CHECK(triple_str(F, ts[2]) == "T | 4,1 | 1 1");
    CHECK(triple_str(F, ts[3]) == "T | 5 | 1");
    CHECK(triple_str(F, ts[4]) == "T^2 | 4,1 | 1 1");
    CHECK(triple_str(F, ts[5]) == "T^2 | 5 | 1");
}

TEST_CASE("reduction triples carry the depth sign away from characteristic two") {
    Fq F(3, 1);
    Evaluator ev(F);
    auto ts = decompose_index(F, ev.at(), IndexComposition{{1, 1}});
    REQUIRE(ts.size() == 2);
    CHECK(triple_str(F, ts[0]) == "2 | 1,1 | 1 1");
    CHECK(triple_str(F, ts[1]) == "2 | 2 | 1");
}

TEST_CASE("the weight-five double zeta fails integrality at the degree-one place") {
    Fq F(2, 1);
    Evaluator ev(F);
    LocalField K(F, make_place(F, P(F, "T")));
    ZetaVResult z = ev.zeta_v(K, IndexComposition{{4, 1}}, 7);
    REQUIRE_FALSE(z.value.is_zero_to_prec());
    CHECK(z.value.prec >= 7);
    auto ds = K.digits(z.value);
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].pow == -3);
    CHECK(poly_to_string(F, ds[0].digit) == "1");
    CHECK(ds[1].pow == 2);
    CHECK(poly_to_string(F, ds[1].digit) == "1");
    CHECK(z.bound.num == -9);
    CHECK(z.bound.den == 1);
    CHECK_FALSE(z.criterion);
    CHECK(z.integral == "false");
}

TEST_CASE("depth-one values vanish when q-1 divides the index") {
    Fq F2(2, 1);
    Evaluator ev2(F2);
    for (const Place& v : enumerate_places(F2, 2)) {
        LocalField K(F2, v);
        for (int s = 1; s <= 4; ++s) {
            CAPTURE(s);
            ZetaVResult z = ev2.zeta_v(K, IndexComposition{{s}}, 6);
            CHECK(z.value.is_zero_to_prec()); // q - 1 = 1 divides everything
            CHECK(z.integral == "true");
        }
    }
    Fq F3(3, 1);
    Evaluator ev3(F3);
    LocalField K(F3, make_place(F3, P(F3, "T")));
    CHECK(ev3.zeta_v(K, IndexComposition{{2}}, 5).value.is_zero_to_prec());
    CHECK(ev3.zeta_v(K, IndexComposition{{4}}, 5).value.is_zero_to_prec());
    ZetaVResult z1 = ev3.zeta_v(K, IndexComposition{{1}}, 5);
    CHECK(K.to_string(z1.value) == "2*T + T^2 + T^3 + O(T^5)");
    ZetaVResult z3 = ev3.zeta_v(K, IndexComposition{{3}}, 5);
    CHECK(K.to_string(z3.value) == "2*T^3 + O(T^5)");
}

TEST_CASE("series and polylog reductions agree at the infinite place") {
    Fq F2(2, 1);
    Evaluator ev2(F2);
    InfField K2(F2);
    for (auto sv : {std::vector<int>{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}}) {
        CAPTURE(index_to_string(sv));
        InfAdic a = zeta_inf_series(K2, IndexComposition{sv}, 7);
        InfAdic b = ev2.zeta_inf_cmspl(K2, IndexComposition{sv}, 7);
        InfAdic d = K2.sub(a, b);
        CHECK(d.is_zero_to_prec());
        CHECK(d.prec >= 7);
    }
    Fq F3(3, 1);
    Evaluator ev3(F3);
    InfField K3(F3);
    for (auto sv : {std::vector<int>{1}, {1, 1}}) {
        InfAdic a = zeta_inf_series(K3, IndexComposition{sv}, 6);
        InfAdic b = ev3.zeta_inf_cmspl(K3, IndexComposition{sv}, 6);
        CHECK(K3.sub(a, b).is_zero_to_prec());
    }
}

TEST_CASE("frozen expansions at the infinite place") {
    Fq F(2, 1);
    InfField K(F);
    CHECK(K.to_string(zeta_inf_series(K, IndexComposition{{1}}, 5)) ==
          "1 + T^-2 + T^-3 + T^-4 + O(T^-5)");
    CHECK(K.to_string(zeta_inf_series(K, IndexComposition{{2, 1}}, 7)) ==
          "T^-4 + T^-6 + O(T^-7)");
}

TEST_CASE("infinite-place series matches a direct double sum") {
    Fq F(2, 1);
    InfField K(F);
    for (auto sv : {std::vector<int>{1, 1}, {2, 1}}) {
        IndexComposition s{sv};
        int64_t prec = 7;
        // truncating at deg a_1 = D drops terms of ord >= s_1 (D + 1)
        int D = (int)((prec + s.parts[0] - 1) / s.parts[0]);
        InfAdic acc = K.zero_to_prec(kExactPrec);
        for (int d1 = 1; d1 <= D; ++d1)
            for (const Poly& a1 : monics_of(F, d1)) {
                InfAdic inv1 = K.inv(K.from_poly(a1, prec + 2 * d1 + 2));
                InfAdic p1 = inv1;
                for (int k = 1; k < s.parts[0]; ++k) p1 = K.mul(p1, inv1);
                for (int d2 = 0; d2 < d1; ++d2)
                    for (const Poly& a2 : monics_of(F, d2)) {
                        InfAdic inv2 = K.inv(K.from_poly(a2, prec + 2 * d2 + 2));
                        InfAdic p2 = inv2;
                        for (int k = 1; k < s.parts[1]; ++k) p2 = K.mul(p2, inv2);
                        acc = K.add(acc, K.mul(p1, p2));
                    }
            }
        acc = K.clamp(acc, prec);
        InfAdic got = zeta_inf_series(K, s, prec);
        CAPTURE(index_to_string(s.parts));
        CHECK(K.sub(got, acc).is_zero_to_prec());
    }
}

TEST_CASE("reductions mod v agree between the two enumerations") {
    for (int q : {2, 3}) {
        Fq F = Fq::from_order(q);
        for (const Place& v : enumerate_places(F, 2)) {
            for (auto sv : {std::vector<int>{1}, {2}, {3}, {1, 1}, {2, 1}}) {
                IndexComposition s{sv};
                CAPTURE(q);
                CAPTURE(index_to_string(s.parts));
                Poly a = finite_zeta(F, v, s);
                Poly b = finite_zeta_direct(F, v, s);
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("reductions mod v vanish when the depth reaches the degree") {
    Fq F(2, 1);
    Place v1 = make_place(F, P(F, "T"));
    Place v2 = make_place(F, P(F, "T^2+T+1"));
    // depth r > eps leaves no strictly decreasing degree chain below deg v
    CHECK(finite_zeta(F, v1, IndexComposition{{1, 1}}).is_zero());
    CHECK(finite_zeta(F, v2, IndexComposition{{1, 1, 1}}).is_zero());
    // the three units 1, T, T+1 sum to zero mod T^2+T+1
    CHECK(finite_zeta(F, v2, IndexComposition{{1}}).is_zero());
}

TEST_CASE("large residue fields certify integrality up to the weight") {
    Fq F4 = Fq::from_order(4);
    Evaluator ev4(F4);
    LocalField K4(F4, make_place(F4, P(F4, "T")));
    for (auto sv : {std::vector<int>{2, 1}, {3, 1}, {4}}) {
        IndexComposition s{sv};
        CAPTURE(index_to_string(s.parts));
        ZetaVResult z = ev4.zeta_v(K4, s, 3);
        CHECK(z.criterion); // q_v = 4 >= weight
        CHECK(z.integral == "true");
    }
    Fq F3 = Fq::from_order(3);
    Evaluator ev3(F3);
    LocalField K3(F3, make_place(F3, P(F3, "T^2+1")));
    ZetaVResult z = ev3.zeta_v(K3, IndexComposition{{3, 2}}, 3);
    CHECK(z.criterion); // q_v = 9 >= 5
    CHECK(z.integral == "true");
}

TEST_CASE("place scans are independent of the worker count") {
    Fq F(2, 1);
    IndexComposition s{{2, 1}};
    auto one = adelic_scan(F, s, 2, 4, 1);
    auto two = adelic_scan(F, s, 2, 4, 2);
    REQUIRE(one.size() == 3);
    REQUIRE(two.size() == one.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].v == two[i].v);
        REQUIRE(one[i].ok);
        REQUIRE(two[i].ok);
        CHECK(one[i].res.integral == two[i].res.integral);
        CHECK(one[i].res.criterion == two[i].res.criterion);
        CHECK(one[i].res.bound.num == two[i].res.bound.num);
        CHECK(one[i].res.bound.den == two[i].res.bound.den);
        LocalField K(F, one[i].v);
        CHECK(K.sub(one[i].res.value, two[i].res.value).is_zero_to_prec());
    }
}

TEST_CASE("star values are reused consistently across the cache") {
    Fq F(2, 1);
    Evaluator ev(F);
    LocalField Ka(F, make_place(F, P(F, "T")));
    LocalField Kb(F, make_place(F, P(F, "T+1")));
    IndexComposition s{{2}};
    std::vector<Poly> u = {P(F, "T^2")};
    VAdic first = ev.li_star(Ka, s, u, 5);
    VAdic again = ev.li_star(Ka, s, u, 5);
    CHECK(Ka.sub(first, again).is_zero_to_prec());
    CHECK(Ka.sub(first, cmspl_v(Ka, s, u, 5)).is_zero_to_prec());
    // same index and point at another place must not collide in the cache
    VAdic other = ev.li_star(Kb, s, u, 5);
    VAdic fresh = cmspl_v(Kb, s, u, 5);
    CHECK(Kb.sub(other, fresh).is_zero_to_prec());
    // a lower-precision request may serve a clamp of the cached value
    VAdic low = ev.li_star(Ka, s, u, 3);
    CHECK(low.prec >= 3);
    CHECK(Ka.sub(low, Ka.clamp(first, 3)).is_zero_to_prec());
}
