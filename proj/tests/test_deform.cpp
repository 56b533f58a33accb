#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vectcoh/deform.hpp"

using namespace vectcoh;

namespace {
Scalar S(long n, long d = 1) { return Scalar(rat_of(n, d)); }
Scalar lam() { return Scalar::lambda(); }

std::set<std::string> cond_strs(const std::vector<TPoly>& cs) {
    std::set<std::string> out;
    for (const auto& c : cs) out.insert(c.str());
    return out;
}
}  // namespace

TEST_CASE("parameter polynomial basics") {
    ParamKey t13{S(1), 2, false};
    CHECK(t13.str() == "t[1,3]");
    CHECK(ParamKey::parse("t[1,3]") == t13);
    ParamKey tt{S(0), 1, true};
    CHECK(tt.str() == "ttilde[0,1]");
    CHECK(ParamKey::parse("ttilde[0,1]") == tt);

    // normalization: content removal and positive leading coefficient
    TPoly p = TPoly::var(t13).scaled(S(-6)) * (TPoly::var(ParamKey{S(1), 0, false}) -
                                               TPoly::var(ParamKey{S(3), 0, false}));
    TPoly nf = p.condition_normal_form();
    CHECK(nf.str() == "t[1,1]*t[1,3] - t[1,3]*t[3,3]");

    // substitution
    std::map<ParamKey, QuadExt> vals{{t13, QuadExt(2)}, {ParamKey{S(1), 0, false}, QuadExt(5)}};
    TPoly q = TPoly::var(t13) * TPoly::var(ParamKey{S(1), 0, false}) + TPoly(S(1));
    CHECK(q.substitute(vals) == S(11));
}

TEST_CASE("ideal membership") {
    ParamKey t11{S(1), 0, false}, t33{S(3), 0, false}, t55{S(5), 0, false};
    ParamKey t13{S(1), 2, false}, t35{S(3), 2, false};
    TPoly g1 = TPoly::var(t13) * (TPoly::var(t11) - TPoly::var(t33));
    TPoly g2 = TPoly::var(t35) * (TPoly::var(t33) - TPoly::var(t55));
    // the degree-3 combination t13 t35 (t11 - t55) lies in the ideal
    TPoly p = TPoly::var(t13) * TPoly::var(t35) * (TPoly::var(t11) - TPoly::var(t55));
    CHECK(ideal_member(p, {g1, g2}));
    CHECK(ideal_member(g1.scaled(S(7, 3)), {g1, g2}));
    CHECK(!ideal_member(TPoly::var(t13) * TPoly::var(t35), {g1, g2}));
    CHECK(!ideal_member(TPoly::var(t11) * TPoly::var(t13) * TPoly::var(t35), {g1, g2}));
    CHECK(ideal_member(TPoly(), {g1}));
}

TEST_CASE("space parameters") {
    CHECK(SymbolSpace::parse("n=2,delta=3").str() == "S^2_{3}");
    CHECK(SymbolSpace::parse("n=2,delta=l+3").delta == lam() + S(3));

    auto keys = [](const SymbolSpace& sp) {
        std::set<std::string> out;
        for (const auto& k : space_params(sp)) out.insert(k.str());
        return out;
    };
    CHECK(keys({2, S(3)}) ==
          std::set<std::string>{"t[1,1]", "t[1,3]", "t[2,2]", "t[3,3]"});
    CHECK(keys({3, S(4)}) == std::set<std::string>{"t[1,1]", "t[1,3]", "t[1,4]", "t[2,2]",
                                                   "t[2,4]", "t[3,3]", "t[4,4]"});
    // the space S^3_3 admits t[1,3] alongside the resonant pair at (0,1)
    CHECK(keys({3, S(3)}) ==
          std::set<std::string>{"t[0,0]", "t[0,1]", "ttilde[0,1]", "t[0,2]", "t[0,3]", "t[1,1]",
                                "t[1,3]", "t[2,2]", "t[3,3]"});
    CHECK(keys({4, S(5)}).size() == 11);
    // formal shift: only the everywhere-resonant families
    CHECK(keys({2, lam() + S(3)}) ==
          std::set<std::string>{"t[l+1,l+1]", "t[l+1,l+3]", "t[l+2,l+2]", "t[l+3,l+3]"});
}

TEST_CASE("block conditions reproduce the low-shift table exactly") {
    CHECK(cond_strs(derive_block_conditions(S(0), 1)) ==
          std::set<std::string>{"t[0,0]*t[0,1] - t[0,1]*t[1,1] - ttilde[0,1]*t[1,1]"});
    CHECK(cond_strs(derive_block_conditions(lam(), 2)) ==
          std::set<std::string>{"t[l,l]*t[l,l+2] - t[l,l+2]*t[l+2,l+2]"});
    CHECK(cond_strs(derive_block_conditions(lam(), 3)) ==
          std::set<std::string>{"t[l,l]*t[l,l+3] - t[l,l+3]*t[l+3,l+3]"});
    CHECK(cond_strs(derive_block_conditions(lam(), 4)) ==
          std::set<std::string>{"t[l,l]*t[l,l+4] - t[l,l+4]*t[l+4,l+4]"});
}

TEST_CASE("the k=7 generic block condition carries (2l+13) and (1-2l)") {
    auto conds = derive_block_conditions(lam(), 7);
    REQUIRE(conds.size() == 1);
    CHECK(conds[0].str() ==
          "(2*l+13)*t[l,l+3]*t[l+3,l+7] + (-2*l+1)*t[l,l+4]*t[l+4,l+7]");
}

TEST_CASE("example space S^2_3") {
    SymbolSpace sp{2, S(3)};
    AnalysisReport rep = analyze(sp, 3);
    REQUIRE(rep.ok);
    CHECK(cond_strs(rep.order2.conditions) ==
          std::set<std::string>{"t[1,1]*t[1,3] - t[1,3]*t[3,3]"});
    CHECK(rep.l2.full().empty());
    CHECK(rep.terminated);
    CHECK(rep.termination_order == 1);
    REQUIRE(rep.branches.branches.size() == 2);
    for (const auto& b : rep.branches.branches) CHECK(b.free_params == 3);
    CHECK(rep.branches.all_recognized);
}

TEST_CASE("example space S^3_4") {
    SymbolSpace sp{3, S(4)};
    AnalysisReport rep = analyze(sp, 3);
    REQUIRE(rep.ok);
    CHECK(cond_strs(rep.order2.conditions) ==
          std::set<std::string>{"t[1,1]*t[1,3] - t[1,3]*t[3,3]",
                                "t[2,2]*t[2,4] - t[2,4]*t[4,4]",
                                "t[1,1]*t[1,4] - t[1,4]*t[4,4]"});
    CHECK(rep.l2.full().empty());
    CHECK(rep.terminated);
    CHECK(rep.termination_order == 1);
    CHECK(rep.branches.branches.size() == 8);
    for (const auto& b : rep.branches.branches) CHECK(b.free_params == 4);
}

TEST_CASE("example space S^3_3 restores the omitted shift-2 parameter") {
    SymbolSpace sp{3, S(3)};
    AnalysisReport rep = analyze(sp, 3);
    REQUIRE(rep.ok);
    // the (0,3) block carries a resonant correction through Ctilde_{0,1}
    // with class coordinate 1/2, the k=3 analogue of the classical (1/10)
    // corrections at k=4; the necessity oracle confirms it
    std::set<std::string> expected{
        "t[0,0]*t[0,1] - t[0,1]*t[1,1] - ttilde[0,1]*t[1,1]",
        "t[0,0]*t[0,2] - t[0,2]*t[2,2]",
        "2*t[0,0]*t[0,3] + ttilde[0,1]*t[1,3] - 2*t[0,3]*t[3,3]",
        "t[1,1]*t[1,3] - t[1,3]*t[3,3]"};
    CHECK(cond_strs(rep.order2.conditions) == expected);
    // the trinomial relation is outside the recognized branch shapes
    CHECK(!rep.branches.all_recognized);
    // the completed second-order term exposes genuine third-order relations
    REQUIRE(!rep.higher.empty());
    CHECK(!rep.higher[0].new_conditions.empty());
}

TEST_CASE("example space S^4_5 through order 4") {
    SymbolSpace sp{4, S(5)};
    AnalysisReport rep = analyze(sp, 4);
    REQUIRE(rep.ok);
    std::set<std::string> cond5{
        "t[1,1]*t[1,3] - t[1,3]*t[3,3]", "t[2,2]*t[2,4] - t[2,4]*t[4,4]",
        "t[3,3]*t[3,5] - t[3,5]*t[5,5]", "t[1,1]*t[1,4] - t[1,4]*t[4,4]",
        "t[2,2]*t[2,5] - t[2,5]*t[5,5]", "t[1,1]*t[1,5] - t[1,5]*t[5,5]"};
    CHECK(cond_strs(rep.order2.conditions) == cond5);

    // the chosen second-order term on the (1,5) block is -t13 t35 X^(4) f'
    auto it = rep.l2.verbatim.find(BlockKey{S(1), 4});
    REQUIRE(it != rep.l2.verbatim.end());
    ParamKey t13{S(1), 2, false}, t35{S(3), 2, false}, t11{S(1), 0, false};
    TPoly t13t35 = TPoly::var(t13) * TPoly::var(t35);
    CHECK(it->second.alpha[0].is_zero());
    CHECK(it->second.alpha[1] == -t13t35);
    for (size_t j = 2; j < it->second.alpha.size(); ++j) CHECK(it->second.alpha[j].is_zero());
    CHECK(rep.l2.full_solves);

    // order 3: the cubic obstruction polynomial is the classical third-order
    // condition; it is already implied by the order-2 ideal
    REQUIRE(rep.higher.size() == 2);
    const OrderReport& o3 = rep.higher[0];
    CHECK(!o3.rhs_zero_mod_ideal);
    std::string cond6 = "t[1,1]*t[1,3]*t[3,5] - t[1,3]*t[3,5]*t[5,5]";
    bool found = false;
    for (const TPoly& p : o3.obstruction_polys) found = found || p.str() == cond6;
    CHECK(found);
    CHECK(o3.new_conditions.empty());
    // L^(3) = (1/5) t11 t13 t35 X^(5) f on the (1,5) block
    auto it3 = o3.term.find(BlockKey{S(1), 4});
    REQUIRE(it3 != o3.term.end());
    CHECK(it3->second.alpha[0] == (TPoly::var(t11) * t13t35).scaled(S(1, 5)));
    for (size_t j = 1; j < it3->second.alpha.size(); ++j) CHECK(it3->second.alpha[j].is_zero());

    // order 4: right-hand side vanishes modulo the ideal; termination at 3
    const OrderReport& o4 = rep.higher[1];
    CHECK(o4.rhs_zero_mod_ideal);
    CHECK(o4.term.empty());
    CHECK(rep.terminated);
    CHECK(rep.termination_order == 3);

    // the all-diagonal branch has seven independent parameters
    bool seven = false;
    for (const auto& b : rep.branches.branches) seven = seven || b.free_params == 7;
    CHECK(seven);
}

TEST_CASE("deformation checks at concrete points") {
    SymbolSpace sp{2, S(3)};
    // branch t11 = t33: a genuine deformation
    std::map<ParamKey, QuadExt> good{{ParamKey{S(1), 0, false}, QuadExt(1)},
                                     {ParamKey{S(2), 0, false}, QuadExt(2)},
                                     {ParamKey{S(3), 0, false}, QuadExt(1)},
                                     {ParamKey{S(1), 2, false}, QuadExt(5)}};
    PointCheck pc = check_deformation_at_point(sp, good, 3, 6);
    CHECK(pc.pass);
    CHECK(pc.concrete_evaluations > 0);

    // violating the condition fails at order 2 in block (1,3)
    std::map<ParamKey, QuadExt> bad{{ParamKey{S(1), 0, false}, QuadExt(1)},
                                    {ParamKey{S(3), 0, false}, QuadExt(0)},
                                    {ParamKey{S(1), 2, false}, QuadExt(1)}};
    PointCheck pb = check_deformation_at_point(sp, bad, 2, 4);
    CHECK(!pb.pass);
    CHECK(pb.fail_order == 2);
    CHECK(pb.fail_block == "(1,3)");

    // the zero assignment is the undeformed action
    PointCheck pz = check_deformation_at_point(sp, {}, 3, 4);
    CHECK(pz.pass);

    CHECK_THROWS_AS(
        check_deformation_at_point(sp, {{ParamKey{S(0), 1, false}, QuadExt(1)}}, 2, 4),
        parse_error);
}

TEST_CASE("shift invariance of the example spaces") {
    ShiftInvarianceReport r = shift_invariance_check(2, 3, {rat_of(7, 3)});
    CHECK(r.pass);
    ShiftInvarianceReport r2 = shift_invariance_check(3, 3, {});
    CHECK(r2.pass);
}

TEST_CASE("singular-weight structure of the shift-7 and shift-8 blocks") {
    // where the block condition differs from the specialized generic line
    auto generic7 = [](const Rat& v) {
        // (2l+13) t3-chain + (1-2l) t4-chain specialized and normalized
        Scalar w{QuadExt(v)};
        ParamKey a3{w, 3, false}, b3{w + S(3), 4, false};
        ParamKey a4{w, 4, false}, b4{w + S(4), 3, false};
        TPoly p = (TPoly::var(a3) * TPoly::var(b3)).scaled(S(2) * w + S(13)) +
                  (TPoly::var(a4) * TPoly::var(b4)).scaled(S(1) - S(2) * w);
        return p.condition_normal_form();
    };
    std::set<Rat> differ;
    for (long v : {0L, -1L, -2L, -3L, -4L, -5L, -6L, -7L, 1L}) {
        auto cs = derive_block_conditions(S(v), 7);
        bool same = cs.size() == 1 && cs[0] == generic7(rat_of(v));
        if (!same) differ.insert(rat_of(v));
    }
    CHECK(differ == std::set<Rat>{rat_of(0), rat_of(-2), rat_of(-4), rat_of(-6)});

    auto generic8 = [](const Rat& v) {
        Scalar w{QuadExt(v)};
        ParamKey a4{w, 4, false}, b4{w + S(4), 4, false};
        return (TPoly::var(a4) * TPoly::var(b4)).condition_normal_form();
    };
    differ.clear();
    for (long v : {0L, -1L, -2L, -3L, -4L, -5L, -6L, -7L, -8L, 1L}) {
        auto cs = derive_block_conditions(S(v), 8);
        bool same = cs.size() == 1 && cs[0] == generic8(rat_of(v));
        if (!same) differ.insert(rat_of(v));
    }
    CHECK(differ == std::set<Rat>{rat_of(0), rat_of(-3), rat_of(-4), rat_of(-7)});
}

TEST_CASE("order-2 obstruction block at (0,1) has the classical shape") {
    SymbolSpace sp{3, S(3)};
    BlockMap2 b2 = obstruction_blocks(build_infinitesimal(sp), 2);
    auto it = b2.find(BlockKey{S(0), 1});
    REQUIRE(it != b2.end());
    // B = (t[1,1] t[0,1] + t[1,1] ttilde[0,1] - t[0,0] t[0,1]) Omega[0,1]
    ParamKey t00{S(0), 0, false}, t01{S(0), 1, false}, tt{S(0), 1, true}, t11{S(1), 0, false};
    TPoly expect = TPoly::var(t11) * TPoly::var(t01) + TPoly::var(t11) * TPoly::var(tt) -
                   TPoly::var(t00) * TPoly::var(t01);
    Cochain2 om = Catalog::omega01();
    // compare coefficient-wise against expect * Omega
    for (const auto& [jm, coef] : om.body.terms()) {
        auto jt = it->second.terms.find(jm);
        REQUIRE(jt != it->second.terms.end());
        CHECK(jt->second == expect.scaled(coef.constant()));
    }
    CHECK(it->second.terms.size() == om.body.terms().size());
}

TEST_CASE("branch enumeration edge cases") {
    // empty condition set: one branch, the full parameter space
    SymbolSpace sp{0, lam()};
    auto params = space_params(sp);
    BranchEnumeration be = enumerate_component_solutions({}, params);
    REQUIRE(be.branches.size() == 1);
    CHECK(be.branches[0].free_params == static_cast<int>(params.size()));
    // a pure-monomial condition splits on each variable
    ParamKey a{S(0), 5, false}, b{S(5), 4, false};
    BranchEnumeration bm = enumerate_component_solutions({TPoly::var(a) * TPoly::var(b)}, {a, b});
    CHECK(bm.branches.size() == 2);
    // a binomial quadratic is carried, not split
    ParamKey c{S(0), 4, false}, d{S(4), 4, false};
    TPoly bino = (TPoly::var(a) * TPoly::var(b)).scaled(S(60)) + TPoly::var(c) * TPoly::var(d);
    BranchEnumeration bb = enumerate_component_solutions({bino}, {a, b, c, d});
    REQUIRE(bb.branches.size() == 1);
    CHECK(bb.branches[0].residual.size() == 1);
    CHECK(bb.all_recognized);
}

TEST_CASE("necessity of the corrected (0,3) condition") {
    // violates only the resonant-corrected generator: fails exactly there
    SymbolSpace sp{3, S(3)};
    std::map<ParamKey, QuadExt> viol{{ParamKey{S(0), 1, true}, QuadExt(1)},
                                     {ParamKey{S(1), 2, false}, QuadExt(1)}};
    PointCheck pc = check_deformation_at_point(sp, viol, 2, 5);
    CHECK(!pc.pass);
    CHECK(pc.fail_order == 2);
    CHECK(pc.fail_block == "(0,3)");
}
