#include "vectcoh/deform.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vectcoh/oracle.hpp"

namespace vectcoh {

namespace {
Scalar S(long n, long d = 1) { return Scalar(rat_of(n, d)); }
}  // namespace

std::vector<Scalar> SymbolSpace::component_weights() const {
    std::vector<Scalar> w;
    for (int j = n; j >= 0; --j) w.push_back(delta - S(j));
    return w;
}

std::string SymbolSpace::str() const {
    return "S^" + std::to_string(n) + "_{" + weight_str(delta) + "}";
}

SymbolSpace SymbolSpace::parse(const std::string& text) {
    SymbolSpace sp;
    bool have_n = false, have_d = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        size_t eq = piece.find('=');
        if (eq == std::string::npos) throw parse_error("bad space spec: " + text);
        std::string key = piece.substr(0, eq), val = piece.substr(eq + 1);
        if (key == "n") {
            sp.n = std::stoi(val);
            have_n = true;
        } else if (key == "delta") {
            sp.delta = weight_parse(val);
            have_d = true;
        } else {
            throw parse_error("bad space key '" + key + "' in: " + text);
        }
        pos = comma == std::string::npos ? text.size() : comma + 1;
    }
    if (!have_n || !have_d || sp.n < 0) throw parse_error("bad space spec: " + text);
    return sp;
}

bool TCochain1::is_zero() const {
    for (const auto& a : alpha)
        if (!a.is_zero()) return false;
    return true;
}

void TCochain1::add(const TMonomial& m, const Cochain1& c) {
    if (alpha.empty()) {
        weight = c.weight;
        shift = c.shift;
        alpha.assign(shift + 2, TPoly());
    }
    if (c.shift != shift || c.weight != weight)
        throw structure_error("t-cochain addition across blocks");
    for (int j = 0; j <= shift + 1; ++j) {
        TPoly t;
        t.add(m, c.alpha[j]);
        alpha[j] += t;
    }
}

std::vector<TMonomial> TCochain1::monomials() const {
    std::set<TMonomial> ms;
    for (const auto& a : alpha)
        for (const auto& [m, c] : a.terms()) ms.insert(m);
    return std::vector<TMonomial>(ms.begin(), ms.end());
}

Cochain1 TCochain1::coefficient(const TMonomial& m) const {
    Cochain1 c(weight, shift);
    for (int j = 0; j <= shift + 1; ++j) {
        auto it = alpha[j].terms().find(m);
        if (it != alpha[j].terms().end()) c.alpha[j] = it->second;
    }
    return c;
}

Cochain1 TCochain1::at_point(const std::map<ParamKey, QuadExt>& values) const {
    Cochain1 c(weight, shift);
    for (int j = 0; j <= shift + 1; ++j) c.alpha[j] = alpha[j].substitute(values);
    return c;
}

std::string TCochain1::str() const {
    std::ostringstream os;
    bool first = true;
    for (const TMonomial& m : monomials()) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << tmonomial_str(m) << ") * [" << coefficient(m).str() << "]";
    }
    return first ? "0" : os.str();
}

void TCochain2::add(const TMonomial& m, const Cochain2& c) {
    if (!have_block) {
        weight = c.weight;
        shift = c.shift;
        have_block = true;
    }
    if (c.shift != shift || c.weight != weight)
        throw structure_error("t-cochain2 addition across blocks");
    for (const auto& [jm, coef] : c.body.terms()) {
        TPoly t;
        t.add(m, coef);
        add_jet(jm, t);
    }
}

void TCochain2::add_jet(const JetMonomial& jm, const TPoly& p) {
    auto it = terms.find(jm);
    if (it == terms.end()) {
        if (!p.is_zero()) terms.emplace(jm, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) terms.erase(it);
    }
}

std::vector<TMonomial> TCochain2::monomials() const {
    std::set<TMonomial> ms;
    for (const auto& [jm, p] : terms)
        for (const auto& [m, c] : p.terms()) ms.insert(m);
    return std::vector<TMonomial>(ms.begin(), ms.end());
}

Cochain2 TCochain2::coefficient(const TMonomial& m) const {
    JetPoly body(0b011u);
    for (const auto& [jm, p] : terms) {
        auto it = p.terms().find(m);
        if (it != p.terms().end()) body.add_term(jm, it->second);
    }
    return Cochain2(weight, shift, body);
}

TCochain2 TCochain2::reduced(const std::vector<TPoly>& gens) const {
    TCochain2 r;
    r.weight = weight;
    r.shift = shift;
    r.have_block = have_block;
    for (const auto& [jm, p] : terms)
        if (!ideal_member(p, gens)) r.terms.emplace(jm, p);
    return r;
}

bool TCochain2::zero_mod(const std::vector<TPoly>& gens) const {
    for (const auto& [jm, p] : terms)
        if (!ideal_member(p, gens)) return false;
    return true;
}

std::vector<ParamKey> space_params(const SymbolSpace& space) {
    std::vector<ParamKey> out;
    std::vector<Scalar> w = space.component_weights();
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = i; j < w.size(); ++j) {
            int k = static_cast<int>(j - i);
            for (const auto& [key, c] : Catalog::cocycles_at(w[i], k)) {
                ParamKey pk{w[i], k, key.rfind("Ctilde", 0) == 0};
                out.push_back(pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cochain1 param_cocycle(const ParamKey& key) {
    for (const auto& [name, c] : Catalog::cocycles_at(key.lo, key.shift)) {
        bool tilde = name.rfind("Ctilde", 0) == 0;
        if (tilde == key.tilde) return c;
    }
    throw structure_error("no cocycle for parameter " + key.str());
}

DeformationSeries build_infinitesimal(const SymbolSpace& space) {
    DeformationSeries s;
    s.space = space;
    BlockMap1& order1 = s.orders[1];
    for (const ParamKey& pk : space_params(space)) {
        BlockKey bk{pk.lo, pk.shift};
        auto [it, fresh] = order1.try_emplace(bk, TCochain1(pk.lo, pk.shift));
        it->second.add(TMonomial{{pk, 1}}, param_cocycle(pk));
    }
    return s;
}

namespace {

void accumulate_cup(BlockMap2& acc, const TCochain1& A, const TCochain1& B, const Scalar& factor) {
    // [[A, B]] over all monomial pairs, gated on chaining
    Scalar a_target = A.weight + Scalar(A.shift);
    Scalar b_target = B.weight + Scalar(B.shift);
    bool chain_a = b_target == A.weight;  // B first, then A
    bool chain_b = a_target == B.weight;  // A first, then B
    if (!chain_a && !chain_b) return;
    Scalar source = chain_a ? B.weight : A.weight;
    int total = A.shift + B.shift;
    BlockKey bk{source, total};
    for (const TMonomial& ma : A.monomials()) {
        Cochain1 ca = A.coefficient(ma);
        if (ca.is_zero()) continue;
        for (const TMonomial& mb : B.monomials()) {
            Cochain1 cb = B.coefficient(mb);
            if (cb.is_zero()) continue;
            Cochain2 cc = cup(ca, cb).scaled(factor);
            if (cc.is_zero()) continue;
            acc[bk].add(tmonomial_mul(ma, mb), cc);
        }
    }
}

}  // namespace

BlockMap2 obstruction_blocks(const DeformationSeries& series, int m) {
    BlockMap2 acc;
    Scalar half = S(1, 2);
    for (int i = 1; i < m; ++i) {
        int j = m - i;
        auto it_i = series.orders.find(i);
        auto it_j = series.orders.find(j);
        if (it_i == series.orders.end() || it_j == series.orders.end()) continue;
        for (const auto& [bk1, A] : it_i->second)
            for (const auto& [bk2, B] : it_j->second) accumulate_cup(acc, A, B, half);
    }
    // drop blocks that became zero
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

BlockMap2 maurer_cartan_rhs(const DeformationSeries& series, int m) {
    BlockMap2 b = obstruction_blocks(series, m);
    for (auto& [bk, tc] : b)
        for (auto& [jm, p] : tc.terms) p = -p;
    return b;
}

ConditionExtraction extract_conditions(const BlockMap2& b2) {
    ConditionExtraction out;
    std::set<std::string> seen;
    for (const auto& [bk, tc] : b2) {
        BlockReport br;
        br.block = bk;
        auto basis_pairs = Catalog::basis_cocycles_at(bk.lo, bk.shift);
        std::vector<Cochain2> basis;
        for (const auto& [key, om] : basis_pairs) {
            br.basis_keys.push_back(key);
            basis.push_back(om);
        }
        br.omega1.assign(basis.size(), TPoly());
        for (const TMonomial& m : tc.monomials()) {
            Cochain2 gamma = tc.coefficient(m);
            if (gamma.is_zero()) continue;
            ClassDecomposition dec = decompose(gamma, basis);
            if (!dec.ok || dec.basis_degenerate) {
                br.ok = false;
                br.diagnostic = "undetermined block " + bk.str() + " at chain " + tmonomial_str(m) +
                                (dec.basis_degenerate ? " (degenerate basis)" : " (no decomposition)");
                out.ok = false;
                out.diagnostic = br.diagnostic;
                break;
            }
            for (size_t i = 0; i < basis.size(); ++i) {
                TPoly t;
                t.add(m, dec.coords[i]);
                br.omega1[i] += t;
            }
            if (!dec.witness.is_zero()) br.witnesses.emplace(m, dec.witness);
        }
        if (br.ok) {
            for (const TPoly& w1 : br.omega1) {
                if (w1.is_zero()) continue;
                TPoly cond = w1.condition_normal_form();
                if (seen.insert(cond.str()).second) out.conditions.push_back(cond);
            }
        }
        out.blocks.push_back(std::move(br));
        if (!out.ok) break;
    }
    return out;
}

BlockMap1 SecondOrder::full() const {
    BlockMap1 f = verbatim;
    for (const auto& [bk, tc] : completion) {
        auto it = f.find(bk);
        if (it == f.end()) {
            f.emplace(bk, tc);
            continue;
        }
        for (int j = 0; j <= tc.shift + 1; ++j) it->second.alpha[j] += tc.alpha[j];
    }
    for (auto it = f.begin(); it != f.end();)
        it = it->second.is_zero() ? f.erase(it) : std::next(it);
    return f;
}

namespace {

// Structure of the classical closed-form second-order term: which chains it
// covers, and the transcribed map where one is printed and correct.  Chains
// covered without a usable printed map take the solver witness but still
// belong to the closed-form assembly.
struct L2Coverage {
    bool covered = false;
    std::optional<Cochain1> printed;
};

L2Coverage classical_l2_coverage(const BlockKey& bk, const TMonomial& mono) {
    L2Coverage out;
    std::vector<ParamKey> keys;
    for (const auto& [k, e] : mono)
        for (int i = 0; i < e; ++i) keys.push_back(k);
    if (keys.size() != 2) return out;
    const ParamKey& a = keys[0];  // ascending: a.lo <= b.lo
    const ParamKey& b = keys[1];
    int k = bk.shift;
    const Scalar& w = bk.lo;
    auto is_chain = [&](int j) { return a.lo == w && a.shift == j && b.shift == k - j; };
    if (k == 4) {
        if (is_chain(2) && !a.tilde) {
            out.covered = true;
            out.printed = Catalog::b_k4(w);
        } else if (w == S(0) && is_chain(1) && a.tilde) {
            out.covered = true;  // printed map fails verification; solver witness used
        } else if (w == S(-3) && is_chain(3) && b.tilde) {
            out.covered = true;
        }
    } else if (k == 5) {
        if (is_chain(2) && !a.tilde) {
            out.covered = true;
            if (w != S(0) && w != S(-2) && w != S(-4)) out.printed = Catalog::b_k5(w);
        } else if (is_chain(3) && !a.tilde && !b.tilde) {
            out.covered = true;
            if (w == S(-2)) {
                // printed special map fails verification; solver witness used
            } else if (w != S(-4)) {
                out.printed = Catalog::b_k5_tilde(w);
            }
        } else if (is_chain(0)) {
            out.covered = true;
            if (w == S(0)) out.printed = Catalog::b05_bar();
            if (w == S(-4)) out.printed = Catalog::bm41_bar();
        }
    } else if (k == 6 || k == 7 || k == 8) {
        // the closed form sums these blocks with witnesses left unprinted
        out.covered = true;
    } else if (k == 9 && w == S(-4)) {
        out.covered = true;  // the t[-4,1] t[1,5] term; factor fixed at 1/2
    }
    return out;
}

}  // namespace

SecondOrder build_second_order(const SymbolSpace& space, const ConditionExtraction& order2,
                               const BlockMap2& b2) {
    SecondOrder out;
    Scalar half = S(1, 2);
    for (const BlockReport& br : order2.blocks) {
        for (const auto& [mono, witness] : br.witnesses) {
            TPoly coef;
            coef.add(mono, Scalar(1));
            if (ideal_member(coef, order2.conditions)) continue;
            L2Coverage cov = classical_l2_coverage(br.block, mono);
            BlockMap1& dest = cov.covered ? out.verbatim : out.completion;
            auto [it, fresh] = dest.try_emplace(br.block, TCochain1(br.block.lo, br.block.shift));
            const Cochain1& use = cov.printed ? *cov.printed : witness;
            it->second.add(mono, use.scaled(half));
            if (cov.covered && !cov.printed) {
                out.notes.push_back("block " + br.block.str() + " chain " + tmonomial_str(mono) +
                                    ": closed-form slot filled with the solver-derived witness");
            } else if (!cov.covered) {
                out.notes.push_back("block " + br.block.str() + " chain " + tmonomial_str(mono) +
                                    ": completion term outside the printed closed form");
            }
        }
    }
    // verify d(full) == (1/2) B^(2) modulo the conditions ideal, per block
    out.full_solves = true;
    BlockMap1 full = out.full();
    std::set<BlockKey> blocks;
    for (const auto& [bk, tc] : full) blocks.insert(bk);
    for (const auto& [bk, tc] : b2) blocks.insert(bk);
    for (const BlockKey& bk : blocks) {
        TCochain2 diff;
        diff.weight = bk.lo;
        diff.shift = bk.shift;
        auto itf = full.find(bk);
        if (itf != full.end()) {
            for (const TMonomial& m : itf->second.monomials()) {
                Cochain2 db = coboundary1(itf->second.coefficient(m));
                diff.add(m, db);
            }
        }
        auto itb = b2.find(bk);
        if (itb != b2.end()) {
            for (const auto& [jm, p] : itb->second.terms) diff.add_jet(jm, p.scaled(-half));
        }
        if (!diff.zero_mod(order2.conditions)) {
            out.full_solves = false;
            out.notes.push_back("block " + bk.str() +
                                ": d(L2) != (1/2)B modulo the conditions ideal");
        }
    }
    return out;
}

namespace {

struct JointSolve {
    bool ok = true;
    std::vector<TPoly> class_coords;
    TCochain1 witness;
    std::vector<TPoly> residuals;
};

JointSolve joint_solve_block(const TCochain2& rhs, const std::vector<Cochain2>& basis) {
    JointSolve out;
    std::vector<Cochain2> dcols = coboundary_columns(rhs.weight, rhs.shift);
    std::map<JetMonomial, size_t, JetMonomialDescending> row_of;
    auto see = [&](const JetPoly& p) {
        for (const auto& [m, c] : p.terms()) row_of.emplace(m, 0);
    };
    for (const auto& om : basis) see(om.body);
    for (const auto& c : dcols) see(c.body);
    for (const auto& [jm, p] : rhs.terms) row_of.emplace(jm, 0);
    size_t nrows = 0;
    for (auto& [m, idx] : row_of) idx = nrows++;

    size_t nb = basis.size(), na = dcols.size(), ncols = nb + na;
    std::vector<std::vector<Scalar>> a(nrows, std::vector<Scalar>(ncols, Scalar(0)));
    std::vector<TPoly> b(nrows);
    for (size_t i = 0; i < nb; ++i)
        for (const auto& [m, c] : basis[i].body.terms()) a[row_of[m]][i] = c;
    for (size_t j = 0; j < na; ++j)
        for (const auto& [m, c] : dcols[j].body.terms()) a[row_of[m]][nb + j] = c;
    for (const auto& [jm, p] : rhs.terms) b[row_of[jm]] = p;

    std::vector<int> pivot_row_of_col(ncols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < nrows; ++col) {
        size_t piv = rank;
        while (piv < nrows && a[piv][col].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        Scalar pi = a[rank][col].inv();
        for (size_t j = col; j < ncols; ++j) a[rank][j] *= pi;
        b[rank] = b[rank].scaled(pi);
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (size_t j = col; j < ncols; ++j) a[r][j] -= f * a[rank][j];
            b[r] -= b[rank].scaled(f);
        }
        pivot_row_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    for (size_t r = rank; r < nrows; ++r)
        if (!b[r].is_zero()) out.residuals.push_back(b[r]);
    out.class_coords.assign(nb, TPoly());
    out.witness = TCochain1(rhs.weight, rhs.shift);
    for (size_t i = 0; i < nb; ++i)
        if (pivot_row_of_col[i] >= 0) out.class_coords[i] = b[pivot_row_of_col[i]];
    for (size_t j = 0; j < na; ++j)
        if (pivot_row_of_col[nb + j] >= 0) out.witness.alpha[j] = b[pivot_row_of_col[nb + j]];
    return out;
}

}  // namespace

BranchEnumeration enumerate_component_solutions(const std::vector<TPoly>& conditions,
                                                const std::vector<ParamKey>& params) {
    BranchEnumeration out;
    struct Choice {
        std::vector<TPoly> options;  // each option = one factor to kill
        std::optional<TPoly> carry;  // non-factorable remainder
    };
    std::vector<Choice> per_condition;
    for (const TPoly& cond : conditions) {
        Choice ch;
        // pull out common variables
        TPoly rest = cond;
        std::vector<ParamKey> pulled;
        bool progress = true;
        while (progress && !rest.is_constant()) {
            progress = false;
            std::set<ParamKey> cands;
            for (const auto& [k, e] : rest.terms().begin()->first) cands.insert(k);
            for (const ParamKey& v : cands) {
                bool divides_all = true;
                for (const auto& [m, c] : rest.terms()) {
                    auto it = m.find(v);
                    if (it == m.end() || it->second < 1) {
                        divides_all = false;
                        break;
                    }
                }
                if (!divides_all) continue;
                pulled.push_back(v);
                TPoly quo;
                for (const auto& [m, c] : rest.terms()) {
                    TMonomial m2 = m;
                    if (--m2[v] == 0) m2.erase(v);
                    quo.add(m2, c);
                }
                rest = quo;
                progress = true;
                break;
            }
        }
        std::sort(pulled.begin(), pulled.end());
        pulled.erase(std::unique(pulled.begin(), pulled.end()), pulled.end());
        for (const ParamKey& v : pulled) ch.options.push_back(TPoly::var(v));
        if (rest.is_constant()) {
            // condition was a pure monomial
        } else if (rest.degree() == 1) {
            ch.options.push_back(rest.condition_normal_form());
        } else if (rest.terms().size() <= 2 && rest.degree() == 2) {
            ch.carry = rest.condition_normal_form();  // recognized binomial quadratic
        } else {
            ch.carry = cond;
            ch.options.clear();
            out.all_recognized = false;
            out.flagged.push_back(cond);
        }
        per_condition.push_back(std::move(ch));
    }
    // cartesian product of the factor choices
    std::vector<Branch> acc{Branch{}};
    for (const Choice& ch : per_condition) {
        std::vector<Branch> next;
        for (const Branch& base : acc) {
            if (ch.options.empty()) {
                Branch b = base;
                if (ch.carry) b.residual.push_back(*ch.carry);
                next.push_back(std::move(b));
                continue;
            }
            for (const TPoly& opt : ch.options) {
                Branch b = base;
                b.chosen.push_back(opt);
                if (ch.carry) b.residual.push_back(*ch.carry);
                next.push_back(std::move(b));
            }
        }
        acc = std::move(next);
    }
    // normalize and deduplicate
    std::set<std::string> seen;
    for (Branch& b : acc) {
        std::set<std::string> cset, rset;
        for (const TPoly& p : b.chosen) cset.insert(p.str());
        for (const TPoly& p : b.residual) rset.insert(p.str());
        std::string key;
        for (const auto& s : cset) key += s + ";";
        key += "|";
        for (const auto& s : rset) key += s + ";";
        if (!seen.insert(key).second) continue;
        // free parameter count on purely linear branches
        if (b.residual.empty()) {
            std::map<ParamKey, size_t> col;
            for (const ParamKey& p : params) col.emplace(p, col.size());
            LinearSystem sys;
            for (const auto& p : params) sys.labels.push_back(p.str());
            for (const TPoly& c : b.chosen) {
                std::vector<Scalar> row(params.size(), Scalar(0));
                bool linear = true;
                for (const auto& [m, coef] : c.terms()) {
                    if (tmonomial_degree(m) != 1) {
                        linear = false;
                        break;
                    }
                    row[col.at(m.begin()->first)] = coef;
                }
                if (!linear) {
                    sys.a.clear();
                    break;
                }
                sys.a.push_back(std::move(row));
            }
            if (!sys.a.empty() || b.chosen.empty()) {
                sys.rhs.assign(sys.a.size(), Scalar(0));
                SolveResult r = solve_exact(sys);
                b.free_params = static_cast<int>(params.size() - r.pivot_cols.size());
            }
        }
        out.branches.push_back(std::move(b));
    }
    return out;
}

std::string Branch::str() const {
    std::ostringstream os;
    os << "{ ";
    for (const TPoly& p : chosen) os << p.str() << " = 0; ";
    for (const TPoly& p : residual) os << "[" << p.str() << " = 0]; ";
    os << "}";
    if (free_params >= 0) os << " free parameters: " << free_params;
    return os.str();
}

AnalysisReport analyze(const SymbolSpace& space, int max_order) {
    AnalysisReport rep;
    rep.space = space;
    rep.params = space_params(space);
    DeformationSeries series = build_infinitesimal(space);
    BlockMap2 b2 = obstruction_blocks(series, 2);
    rep.order2 = extract_conditions(b2);
    if (!rep.order2.ok) {
        rep.ok = false;
        rep.diagnostic = rep.order2.diagnostic;
        return rep;
    }
    rep.l2 = build_second_order(space, rep.order2, b2);
    // two sequences from here on: the classical one follows the printed
    // closed form (its obstruction polynomials match the displayed
    // higher-order equations); the completed one adds the solver terms the
    // closed form omits and carries the actual ideal.  The golden low-order
    // witnesses agree because the completion's contributions reduce away
    // modulo the conditions.
    DeformationSeries classical = series;
    classical.orders[2] = rep.l2.verbatim;
    series.orders[2] = rep.l2.full();

    std::vector<TPoly> ideal = rep.order2.conditions;
    std::set<std::string> seen;
    for (const TPoly& c : ideal) seen.insert(c.str());

    int last_nonzero = 2;
    bool all_zero_l2 = rep.l2.full().empty();
    if (all_zero_l2) last_nonzero = 1;

    for (int m = 3; m <= max_order; ++m) {
        OrderReport orep;
        orep.order = m;
        BlockMap2 rhs = maurer_cartan_rhs(series, m);
        BlockMap2 rhs_classical = maurer_cartan_rhs(classical, m);
        orep.rhs_zero_mod_ideal = true;
        for (const auto& [bk, tc] : rhs)
            if (!tc.zero_mod(ideal)) orep.rhs_zero_mod_ideal = false;
        if (!orep.rhs_zero_mod_ideal) {
            std::vector<TPoly> new_conds;
            std::set<std::string> op_seen;
            auto harvest = [&](const BlockMap2& source, bool feeds_ideal) {
                for (const auto& [bk, tc] : source) {
                    auto basis_pairs = Catalog::basis_cocycles_at(bk.lo, bk.shift);
                    std::vector<Cochain2> basis;
                    for (const auto& [key, om] : basis_pairs) basis.push_back(om);
                    JointSolve js = joint_solve_block(tc, basis);
                    auto note = [&](const TPoly& p) {
                        if (p.is_zero()) return;
                        TPoly nf = p.condition_normal_form();
                        if (op_seen.insert(nf.str()).second) orep.obstruction_polys.push_back(nf);
                        if (feeds_ideal && !ideal_member(nf, ideal) &&
                            seen.insert(nf.str()).second)
                            new_conds.push_back(nf);
                    };
                    for (const TPoly& c : js.class_coords) note(c);
                    for (const TPoly& r : js.residuals) note(r);
                }
            };
            harvest(rhs_classical, false);
            harvest(rhs, true);
            for (const TPoly& c : new_conds) {
                orep.new_conditions.push_back(c);
                ideal.push_back(c);
                // a nonzero constant obstruction cannot be repaired
                if (c.is_constant()) {
                    orep.genuine_obstruction = true;
                    orep.diagnostic = "constant obstruction at order " + std::to_string(m);
                }
            }
            // solve the ideal-reduced equation for the order-m term
            for (const auto& [bk, tc] : rhs) {
                TCochain2 red = tc.reduced(ideal);
                if (red.is_zero()) continue;
                auto basis_pairs = Catalog::basis_cocycles_at(bk.lo, bk.shift);
                std::vector<Cochain2> basis;
                for (const auto& [key, om] : basis_pairs) basis.push_back(om);
                JointSolve js = joint_solve_block(red, basis);
                for (const TPoly& r : js.residuals) {
                    if (!ideal_member(r, ideal)) {
                        orep.genuine_obstruction = true;
                        orep.diagnostic = "unresolvable residual at block " + bk.str();
                    }
                }
                for (const TPoly& c : js.class_coords) {
                    if (!ideal_member(c, ideal)) {
                        orep.genuine_obstruction = true;
                        orep.diagnostic = "class obstruction survives at block " + bk.str();
                    }
                }
                TCochain1 term = js.witness;
                for (auto& a : term.alpha)
                    if (ideal_member(a, ideal)) a = TPoly();
                if (!term.is_zero()) orep.term.emplace(bk, std::move(term));
            }
            if (!orep.term.empty()) last_nonzero = m;
        }
        series.orders[m] = orep.term;
        classical.orders[m] = orep.term;
        rep.higher.push_back(std::move(orep));
        if (rep.higher.back().genuine_obstruction) {
            rep.ok = false;
            rep.diagnostic = rep.higher.back().diagnostic;
            break;
        }
    }

    // termination: the last computed order had vanishing right-hand side and
    // all cross products among the existing higher-order terms vanish
    if (rep.ok && !rep.higher.empty() && rep.higher.back().rhs_zero_mod_ideal) {
        bool tails_vanish = true;
        for (int i = 2; i <= max_order; ++i) {
            for (int j = i; j <= max_order; ++j) {
                if (i + j <= max_order) continue;  // already part of a checked rhs
                auto it_i = series.orders.find(i);
                auto it_j = series.orders.find(j);
                if (it_i == series.orders.end() || it_j == series.orders.end()) continue;
                BlockMap2 crossed;
                for (const auto& [b1, A] : it_i->second)
                    for (const auto& [b2, B] : it_j->second)
                        accumulate_cup(crossed, A, B, Scalar(1));
                for (const auto& [bk, tc] : crossed)
                    if (!tc.zero_mod(ideal)) tails_vanish = false;
            }
        }
        if (tails_vanish) {
            rep.terminated = true;
            rep.termination_order = last_nonzero;
        }
    }

    rep.branches = enumerate_component_solutions(ideal, rep.params);
    return rep;
}

PointCheck check_deformation_at_point(const SymbolSpace& space,
                                      const std::map<ParamKey, QuadExt>& assignment,
                                      int max_order, int degree_bound) {
    PointCheck out;
    std::vector<ParamKey> params = space_params(space);
    for (const auto& [k, v] : assignment) {
        if (std::find(params.begin(), params.end(), k) == params.end())
            throw parse_error("parameter " + k.str() + " is not admissible for " + space.str());
    }
    // concrete order-1 term
    std::map<BlockKey, Cochain1> l1;
    for (const ParamKey& pk : params) {
        auto it = assignment.find(pk);
        if (it == assignment.end() || it->second.is_zero()) continue;
        BlockKey bk{pk.lo, pk.shift};
        Cochain1 c = param_cocycle(pk).scaled(Scalar(it->second));
        auto [slot, fresh] = l1.try_emplace(bk, c);
        if (!fresh) slot->second = slot->second + c;
    }
    std::map<int, std::map<BlockKey, Cochain1>> orders;
    orders[1] = l1;

    int maxshift = 0;
    for (int m = 2; m <= max_order; ++m) {
        // concrete obstruction B_m per block
        std::map<BlockKey, Cochain2> bm;
        for (int i = 1; i < m; ++i) {
            int j = m - i;
            if (!orders.count(i) || !orders.count(j)) continue;
            for (const auto& [bk1, c1] : orders[i]) {
                for (const auto& [bk2, c2] : orders[j]) {
                    if (!cup_chains(c1, c2)) continue;
                    Cochain2 cc = cup(c1, c2).scaled(Scalar(rat_of(1, 2)));
                    if (cc.is_zero()) continue;
                    BlockKey bk{cc.weight, cc.shift};
                    auto [slot, fresh] = bm.try_emplace(bk, cc);
                    if (!fresh) slot->second = slot->second + cc;
                }
            }
        }
        std::map<BlockKey, Cochain1>& lm = orders[m];
        for (const auto& [bk, B] : bm) {
            if (B.is_zero()) continue;
            maxshift = std::max(maxshift, bk.shift);
            auto basis_pairs = Catalog::basis_cocycles_at(bk.lo, bk.shift);
            std::vector<Cochain2> basis;
            for (const auto& [key, om] : basis_pairs) basis.push_back(om);
            ClassDecomposition dec = decompose(-B, basis);
            if (!dec.ok) {
                out.fail_order = m;
                out.fail_block = bk.str();
                out.detail = "order-" + std::to_string(m) + " obstruction at block " + bk.str() +
                             " is not a coboundary";
                return out;
            }
            for (size_t i = 0; i < dec.coords.size(); ++i) {
                if (!dec.coords[i].is_zero()) {
                    out.fail_order = m;
                    out.fail_block = bk.str();
                    out.detail = "order-" + std::to_string(m) + " obstruction at block " + bk.str() +
                                 " has nonzero class coordinate " + dec.coords[i].str() + " along " +
                                 basis_pairs[i].first;
                    return out;
                }
            }
            if (!dec.witness.is_zero()) lm.emplace(bk, dec.witness);
        }
        out.orders_checked = m;
    }

    // cross-check every order symbolically and concretely
    int bound = degree_bound >= 0 ? degree_bound : maxshift + 4;
    for (int m = 2; m <= max_order; ++m) {
        std::map<BlockKey, Cochain2> bm;
        for (int i = 1; i < m; ++i) {
            int j = m - i;
            if (!orders.count(i) || !orders.count(j)) continue;
            for (const auto& [bk1, c1] : orders[i])
                for (const auto& [bk2, c2] : orders[j]) {
                    if (!cup_chains(c1, c2)) continue;
                    Cochain2 cc = cup(c1, c2).scaled(Scalar(rat_of(1, 2)));
                    if (cc.is_zero()) continue;
                    BlockKey bk{cc.weight, cc.shift};
                    auto [slot, fresh] = bm.try_emplace(bk, cc);
                    if (!fresh) slot->second = slot->second + cc;
                }
        }
        std::set<BlockKey> blocks;
        for (const auto& [bk, c] : bm) blocks.insert(bk);
        if (orders.count(m))
            for (const auto& [bk, c] : orders[m]) blocks.insert(bk);
        for (const BlockKey& bk : blocks) {
            // symbolic defect: d L_m + B_m = 0
            JetPoly defect(0b011u);
            bool have = false;
            if (orders.count(m) && orders[m].count(bk)) {
                defect += coboundary1(orders[m][bk]).body;
                have = true;
            }
            if (bm.count(bk)) {
                defect += bm[bk].body;
                have = true;
            }
            if (have && !defect.is_zero()) {
                out.fail_order = m;
                out.fail_block = bk.str();
                out.detail = "symbolic defect at order " + std::to_string(m);
                return out;
            }
            // concrete monomial cross-check: coboundary and cups evaluated by
            // plain polynomial arithmetic
            QuadExt l0 = bk.lo.is_constant() ? bk.lo.constant() : QuadExt(rat_of(7, 3));
            for (int a = 0; a <= bound && out.detail.empty(); ++a) {
                UPoly X = UPoly::monomial(QuadExt(1), a);
                for (int b = 0; b <= bound; ++b) {
                    UPoly Y = UPoly::monomial(QuadExt(1), b);
                    for (int e = 0; e <= bound; ++e) {
                        UPoly f = UPoly::monomial(QuadExt(1), e);
                        UPoly acc;
                        if (orders.count(m) && orders[m].count(bk))
                            acc += concrete_coboundary1(orders[m][bk], l0, X, Y, f);
                        for (int i = 1; i < m; ++i) {
                            int j = m - i;
                            if (!orders.count(i) || !orders.count(j)) continue;
                            for (const auto& [bk1, c1] : orders[i])
                                for (const auto& [bk2, c2] : orders[j]) {
                                    if (!cup_chains(c1, c2)) continue;
                                    Scalar src = c2.target() == c1.weight ? c2.weight : c1.weight;
                                    int tot = c1.shift + c2.shift;
                                    if (!(BlockKey{src, tot} == bk)) continue;
                                    acc += concrete_cup(c1, c2, l0, X, Y, f).scaled(
                                        QuadExt(rat_of(1, 2)));
                                }
                        }
                        ++out.concrete_evaluations;
                        if (!acc.is_zero()) {
                            out.fail_order = m;
                            out.fail_block = bk.str();
                            out.detail = "concrete defect at order " + std::to_string(m) +
                                         ", X=x^" + std::to_string(a) + " Y=x^" +
                                         std::to_string(b) + " f=x^" + std::to_string(e);
                            return out;
                        }
                    }
                }
            }
        }
    }
    out.pass = true;
    return out;
}

std::vector<TPoly> derive_block_conditions(const Scalar& w, int k) {
    SymbolSpace sp{k, w + S(k)};
    DeformationSeries series = build_infinitesimal(sp);
    const BlockMap1& order1 = series.orders[1];
    // assemble only the chains landing in the wanted block
    BlockMap2 filtered;
    BlockKey want{w, k};
    Scalar half = S(1, 2);
    for (const auto& [b1, A] : order1) {
        for (const auto& [b2, B] : order1) {
            Scalar a_target = A.weight + Scalar(A.shift);
            Scalar b_target = B.weight + Scalar(B.shift);
            bool ca = b_target == A.weight, cb = a_target == B.weight;
            if (!ca && !cb) continue;
            Scalar src = ca ? B.weight : A.weight;
            if (!(BlockKey{src, A.shift + B.shift} == want)) continue;
            accumulate_cup(filtered, A, B, half);
        }
    }
    ConditionExtraction ex = extract_conditions(filtered);
    if (!ex.ok) throw structure_error("block condition extraction failed: " + ex.diagnostic);
    return ex.conditions;
}

ShiftInvarianceReport shift_invariance_check(int m, int n, const std::vector<Rat>& samples) {
    ShiftInvarianceReport rep;
    SymbolSpace integer_space{m, S(n)};
    DeformationSeries s0 = build_infinitesimal(integer_space);
    ConditionExtraction e0 = extract_conditions(obstruction_blocks(s0, 2));
    if (!e0.ok) {
        rep.detail = "integer space extraction failed: " + e0.diagnostic;
        return rep;
    }

    auto conditions_relabeled = [&](const Scalar& shift_off) -> std::optional<std::set<std::string>> {
        SymbolSpace sp{m, shift_off + S(n)};
        DeformationSeries s = build_infinitesimal(sp);
        ConditionExtraction e = extract_conditions(obstruction_blocks(s, 2));
        if (!e.ok) return std::nullopt;
        std::set<std::string> out;
        for (const TPoly& c : e.conditions)
            out.insert(c.relabel_weights(shift_off).condition_normal_form().str());
        return out;
    };

    // the formal space only carries the everywhere-resonant families; the
    // integer space may have extra resonance-bound parameters.  The formal
    // family sits inside the integer one as the locus where those extra
    // parameters vanish, so restrict the integer conditions by substituting
    // them to zero and dropping what dies.
    SymbolSpace formal{m, Scalar::lambda() + S(n)};
    std::set<std::string> shared;
    for (const ParamKey& pk : space_params(formal)) {
        ParamKey r = pk;
        r.lo = pk.lo - Scalar::lambda();
        shared.insert(r.str());
    }
    std::set<std::string> expected;
    for (const TPoly& c : e0.conditions) {
        TPoly restricted;
        for (const auto& [mono, coef] : c.terms()) {
            bool only_shared = true;
            for (const auto& [k, e] : mono)
                if (!shared.count(k.str())) only_shared = false;
            if (only_shared) restricted.add(mono, coef);
        }
        if (!restricted.is_zero()) expected.insert(restricted.condition_normal_form().str());
    }

    std::vector<Scalar> offsets{Scalar::lambda()};
    for (const Rat& q : samples) offsets.push_back(Scalar(q));
    for (const Scalar& off : offsets) {
        auto got = conditions_relabeled(off);
        if (!got) {
            rep.detail = "extraction failed at shift " + weight_str(off);
            return rep;
        }
        if (*got != expected) {
            std::ostringstream os;
            os << "mismatch at shift " << weight_str(off) << ": got {";
            for (const auto& s : *got) os << s << "; ";
            os << "} expected {";
            for (const auto& s : expected) os << s << "; ";
            os << "}";
            rep.detail = os.str();
            return rep;
        }
    }
    rep.pass = true;
    rep.detail = "conditions match under relabeling at the formal shift";
    if (!samples.empty()) rep.detail += " and sampled rational shifts";
    return rep;
}

}  // namespace vectcoh
