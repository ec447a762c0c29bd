#include "pk/homology.hpp"

#include <map>

#include "pk/calculus.hpp"

namespace pk {
namespace {

constexpr BiDegree u{0, 1};

struct Block {
    std::vector<Monomial> basis;
};

// (v, k) slice split into bi-degree blocks.
using Graded = std::map<BiDegree, Block>;

Graded graded_slice(const Space& sp, ComplexKind kind, int v, int k, std::size_t cap) {
    Graded out;
    for (auto& m : slice_basis(sp, kind, v, k, std::nullopt, cap)) {
        out[m.degree()].basis.push_back(std::move(m));
    }
    return out;
}

std::size_t checked_rank(const QMatrix& m) {
    const std::size_t r = rank_rref(m);
    if (rank_bareiss(m) != r)
        throw Error("exact rank routines disagree"); // would be a bug, not data
    return r;
}

std::size_t block_rank(const PolyOp& op, const std::vector<Monomial>& src,
                       const std::vector<Monomial>& tgt) {
    if (src.empty()) return 0;
    return checked_rank(operator_matrix(op, src, tgt));
}

QVec coords_in(const Poly& p, const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    QVec v(basis.size(), 0);
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw DimensionMismatch("element leaves the expected slice span");
        v[it->second] = c;
    }
    return v;
}

struct Engine {
    const QuadraticBivector& pi;
    ComplexKind kind;
    PolyOp op;
    bool graded;     // refine slices by bi-degree
    BiDegree op_deg; // degree of the differential when graded
    std::size_t cap;

    std::map<std::pair<int, int>, Graded> cache;

    Graded& slice(int v, int k) {
        auto key = std::make_pair(v, k);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, graded_slice(pi.space, kind, v, k, cap)).first;
        return it->second;
    }

    std::pair<int, int> target_of(int v, int k) const {
        return kind == ComplexKind::Cochain ? std::make_pair(v + 1, k + 1)
                                            : std::make_pair(v + 1, k - 1);
    }

    // Out-rank of every bi-degree block of slice (v, k); ungraded mode
    // uses the single key (0,0).
    std::map<BiDegree, std::size_t> out_ranks(int v, int k) {
        std::map<BiDegree, std::size_t> out;
        if (v < 0 || k < 0) return out;
        auto [tv, tk] = target_of(v, k);
        Graded& src = slice(v, k);
        if (src.empty()) return out;
        if (graded) {
            Graded& tgt = slice(tv, tk);
            static const Block empty;
            for (auto& [deg, blk] : src) {
                auto it = tgt.find(deg + op_deg);
                const Block& tb = it == tgt.end() ? empty : it->second;
                out[deg] = block_rank(op, blk.basis, tb.basis);
            }
        } else {
            std::vector<Monomial> sb, tb;
            for (auto& [deg, blk] : src) sb.insert(sb.end(), blk.basis.begin(), blk.basis.end());
            for (auto& [deg, blk] : slice(tv, tk))
                tb.insert(tb.end(), blk.basis.begin(), blk.basis.end());
            out[BiDegree{0, 0}] = block_rank(op, sb, tb);
        }
        return out;
    }
};

Engine make_engine(const QuadraticBivector& pi, ComplexKind kind, std::size_t cap) {
    PolyOp op;
    if (kind == ComplexKind::Cochain)
        op = [&pi](const Poly& a) { return poisson_coboundary(pi, a); };
    else
        op = [&pi](const Poly& a) { return poisson_boundary(pi, a); };

    bool graded = true;
    BiDegree op_deg{0, 0};
    if (!pi.value.is_zero()) {
        if (auto d = pi.value.homogeneous_degree()) {
            op_deg = *d + u; // bracket and boundary both shift by |pi| + (0,1)
        } else {
            graded = kind == ComplexKind::Chain; // chains need restricted pi anyway
            if (!graded) op_deg = {0, 0};
        }
    }
    return Engine{pi, kind, std::move(op), graded, op_deg, cap, {}};
}

std::vector<SliceReport> dims_impl(const QuadraticBivector& pi, ComplexKind kind,
                                   int max_words, std::size_t cap) {
    Engine eng = make_engine(pi, kind, cap);
    std::vector<SliceReport> reports;
    for (int v = 0; v <= max_words; ++v) {
        for (int k = 0; v + k <= max_words; ++k) {
            auto [sv, sk] = kind == ComplexKind::Cochain ? std::make_pair(v - 1, k - 1)
                                                         : std::make_pair(v - 1, k + 1);
            auto in_ranks = eng.out_ranks(sv, sk);
            auto out_ranks = eng.out_ranks(v, k);
            Graded& here = eng.slice(v, k);
            for (auto& [deg, blk] : here) {
                const std::size_t dim = blk.basis.size();
                if (dim == 0) continue;
                std::size_t rin = 0, rout = 0;
                if (eng.graded) {
                    if (auto it = in_ranks.find(deg - eng.op_deg); it != in_ranks.end())
                        rin = it->second;
                    if (auto it = out_ranks.find(deg); it != out_ranks.end()) rout = it->second;
                } else {
                    // ungraded: one record per (v,k); emit under the first
                    // degree only
                    if (deg != here.begin()->first) continue;
                }
                SliceReport r;
                r.id = {kind, v, k, eng.graded, deg.p, deg.w};
                if (!eng.graded) {
                    std::size_t total = 0;
                    for (auto& [d2, b2] : here) total += b2.basis.size();
                    r.dim = total;
                    if (auto it = in_ranks.find(BiDegree{0, 0}); it != in_ranks.end())
                        rin = it->second;
                    if (auto it = out_ranks.find(BiDegree{0, 0}); it != out_ranks.end())
                        rout = it->second;
                    r.id.p = r.id.w = 0;
                } else {
                    r.dim = dim;
                }
                r.rank_in = rin;
                r.rank_out = rout;
                r.homology_dim = r.dim - rin - rout;
                r.complete = true;
                reports.push_back(std::move(r));
            }
        }
    }
    return reports;
}

// Solve op(x) = component over the source slice basis.
bool membership_solve(Engine& eng, const Poly& element, Poly* witness) {
    if (element.is_zero()) {
        if (witness) *witness = Poly();
        return true;
    }
    // split by (v, k)
    std::map<std::pair<int, int>, Poly> parts;
    for (const auto& [m, c] : element.terms()) {
        int v, k;
        if (eng.kind == ComplexKind::Cochain) {
            v = count_role(m, Role::Var);
            k = count_role(m, Role::Partial);
        } else {
            v = count_role(m, Role::Var) + count_role(m, Role::Partial);
            k = count_role(m, Role::Form) + count_role(m, Role::Star);
        }
        parts[{v, k}].add_term(m, c);
    }
    Poly total_witness;
    for (auto& [vk, comp] : parts) {
        auto [v, k] = vk;
        auto [sv, sk] = eng.kind == ComplexKind::Cochain ? std::make_pair(v - 1, k - 1)
                                                         : std::make_pair(v - 1, k + 1);
        std::vector<Monomial> src, tgt;
        if (sv >= 0 && sk >= 0)
            for (auto& [deg, blk] : eng.slice(sv, sk))
                src.insert(src.end(), blk.basis.begin(), blk.basis.end());
        for (auto& [deg, blk] : eng.slice(v, k))
            tgt.insert(tgt.end(), blk.basis.begin(), blk.basis.end());
        if (src.empty()) return false; // nonzero component, empty source
        QMatrix m = operator_matrix(eng.op, src, tgt);
        auto sol = solve(std::move(m), coords_in(comp, tgt));
        if (!sol) return false;
        if (witness)
            for (std::size_t j = 0; j < src.size(); ++j) total_witness.add_term(src[j], (*sol)[j]);
    }
    if (witness) *witness = std::move(total_witness);
    return true;
}

} // namespace

std::string SliceId::str() const {
    std::string s = complex_kind_name(kind);
    s += "(v=" + std::to_string(v) + ",k=" + std::to_string(k);
    if (graded) s += ",p=" + std::to_string(p) + ",w=" + std::to_string(w);
    return s + ")";
}

QMatrix operator_matrix(const PolyOp& op, const std::vector<Monomial>& source_basis,
                        const std::vector<Monomial>& target_basis) {
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < target_basis.size(); ++i) index[target_basis[i]] = i;
    QMatrix m(target_basis.size(), QVec(source_basis.size(), 0));
    for (std::size_t j = 0; j < source_basis.size(); ++j) {
        const Poly img = op(Poly::term(source_basis[j], 1));
        for (const auto& [mono, c] : img.terms()) {
            auto it = index.find(mono);
            if (it == index.end())
                throw DimensionMismatch("operator image leaves the target slice: " + mono.str());
            m[it->second][j] = c;
        }
    }
    return m;
}

std::vector<SliceReport> cohomology_dims(const QuadraticBivector& pi, int max_words,
                                         std::size_t cap) {
    if (!is_poisson(pi))
        throw NotPoisson("cohomology needs [pi, pi] = 0");
    return dims_impl(pi, ComplexKind::Cochain, max_words, cap);
}

std::vector<SliceReport> homology_dims(const QuadraticBivector& pi, int max_words,
                                       std::size_t cap) {
    if (!pi.restricted)
        throw NotRestricted("homology_dims needs a restricted quadratic bivector");
    if (!is_poisson(pi))
        throw NotPoisson("homology needs [pi, pi] = 0");
    return dims_impl(pi, ComplexKind::Chain, max_words, cap);
}

bool coboundary_membership(const QuadraticBivector& pi, const Poly& cocycle, Poly* witness,
                           std::size_t cap) {
    if (!poisson_coboundary(pi, cocycle).is_zero())
        throw DegreeMismatch("coboundary_membership: element is not a cocycle");
    Engine eng = make_engine(pi, ComplexKind::Cochain, cap);
    return membership_solve(eng, cocycle, witness);
}

bool boundary_membership(const QuadraticBivector& pi, const Poly& cycle, Poly* witness,
                         std::size_t cap) {
    if (!poisson_boundary(pi, cycle).is_zero())
        throw DegreeMismatch("boundary_membership: element is not a cycle");
    Engine eng = make_engine(pi, ComplexKind::Chain, cap);
    return membership_solve(eng, cycle, witness);
}

std::vector<Poly> class_representatives(const QuadraticBivector& pi, const SliceId& slice,
                                        std::size_t cap) {
    if (slice.kind == ComplexKind::Chain && !pi.restricted)
        throw NotRestricted("chain classes need a restricted quadratic bivector");
    Engine eng = make_engine(pi, slice.kind, cap);

    std::optional<BiDegree> want;
    if (slice.graded) want = BiDegree{slice.p, slice.w};

    std::vector<Monomial> here, tgt, src;
    for (auto& [deg, blk] : eng.slice(slice.v, slice.k))
        if (!want || deg == *want) here.insert(here.end(), blk.basis.begin(), blk.basis.end());
    auto [tv, tk] = eng.target_of(slice.v, slice.k);
    for (auto& [deg, blk] : eng.slice(tv, tk))
        if (!want || deg == *want + eng.op_deg)
            tgt.insert(tgt.end(), blk.basis.begin(), blk.basis.end());
    auto [sv, sk] = slice.kind == ComplexKind::Cochain
                        ? std::make_pair(slice.v - 1, slice.k - 1)
                        : std::make_pair(slice.v - 1, slice.k + 1);
    if (sv >= 0 && sk >= 0)
        for (auto& [deg, blk] : eng.slice(sv, sk))
            if (!want || deg == *want - eng.op_deg)
                src.insert(src.end(), blk.basis.begin(), blk.basis.end());

    if (here.empty()) return {};

    // kernel of the outgoing block
    QMatrix mout = operator_matrix(eng.op, here, tgt);
    const auto kernel = nullspace(std::move(mout));

    // image vectors of the incoming block
    QMatrix span;
    for (const auto& s : src) {
        const Poly img = eng.op(Poly::term(s, 1));
        if (!img.is_zero()) span.push_back(coords_in(img, here));
    }

    std::vector<Poly> reps;
    std::size_t r = span.empty() ? 0 : rank_rref(span);
    for (const auto& kv : kernel) {
        span.push_back(kv);
        const std::size_t r2 = rank_rref(span);
        if (r2 > r) {
            r = r2;
            Poly rep;
            for (std::size_t i = 0; i < here.size(); ++i) rep.add_term(here[i], kv[i]);
            reps.push_back(std::move(rep));
        } else {
            span.pop_back();
        }
    }
    return reps;
}

} // namespace pk
