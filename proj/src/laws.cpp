#include "cyl/laws.hpp"

#include <random>
#include <unordered_set>

#include "cyl/eval.hpp"

namespace ca {

LawReport check_substitution_isomorphism(const SetAlgebra& alg, Index i, Index j, std::uint64_t limit) {
    const auto& sp = alg.space();
    if (i == j || i >= sp->dim() || j >= sp->dim()) throw std::invalid_argument("substitution needs distinct indices in range");
    LawReport rep;
    auto fail = [&](const std::string& law, const std::string& detail) { rep.failures.push_back(law + ": " + detail); };
    const PointSet dij = diag(sp, i, j);
    auto s = [&](const PointSet& x) { return cyl(i, x & dij); };
    auto inv = [&](const PointSet& y) { return cyl(j, y & dij); };
    auto dom = alg.closed_elements(j, limit);
    auto cod = alg.closed_elements(i, limit);
    std::unordered_set<PointSet, PointSetHash> codset(cod.begin(), cod.end());
    std::unordered_set<PointSet, PointSetHash> image;
    for (auto& x : dom) {
        auto y = s(x);
        ++rep.checked["into"];
        if (!codset.count(y)) fail("into", x.to_string());
        ++rep.checked["inverse"];
        if (inv(y) != x) fail("inverse", x.to_string());
        image.insert(y);
        ++rep.checked["complement"];
        if (s(~x) != ~y) fail("complement", x.to_string());
        ++rep.checked["c_i to c_j"];
        if (s(cyl(i, x)) != cyl(j, y)) fail("c_i to c_j", x.to_string());
        for (Index k = 0; k < sp->dim(); ++k) {
            if (k == i || k == j) continue;
            ++rep.checked["c_k"];
            if (s(cyl(k, x)) != cyl(k, y)) fail("c_k", "k=" + std::to_string(k) + " " + x.to_string());
        }
    }
    for (auto& y : cod) {
        ++rep.checked["onto"];
        if (!image.count(y) || s(inv(y)) != y) fail("onto", y.to_string());
    }
    for (std::size_t a = 0; a < dom.size(); ++a)
        for (std::size_t b = a; b < dom.size(); ++b) {
            ++rep.checked["join"];
            if (s(dom[a] | dom[b]) != (s(dom[a]) | s(dom[b]))) fail("join", dom[a].to_string() + " " + dom[b].to_string());
        }
    for (Index k = 0; k < sp->dim(); ++k) {
        if (k == i || k == j) continue;
        ++rep.checked["d_ik to d_jk"];
        if (s(diag(sp, i, k)) != diag(sp, j, k)) fail("d_ik to d_jk", "k=" + std::to_string(k));
        for (Index m = 0; m < sp->dim(); ++m) {
            if (m == i || m == j) continue;
            ++rep.checked["d_km"];
            if (s(diag(sp, k, m)) != diag(sp, k, m)) fail("d_km", std::to_string(k) + "," + std::to_string(m));
        }
    }
    return rep;
}

LawReport check_transposition_identities(const SpacePtr& sp, std::uint64_t samples, std::uint64_t seed,
                                         const std::vector<Term>& corpus) {
    LawReport rep;
    std::mt19937_64 rng(seed);
    const Index d = sp->dim();
    auto p = [](Index i, Index j, const PointSet& x) { return transposition(i, j, x); };
    auto check = [&](const std::string& law, bool ok, const std::string& detail) {
        ++rep.checked[law];
        if (!ok) rep.failures.push_back(law + ": " + detail);
    };
    for (Index i = 0; i < d; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Renaming rho = Renaming::swap(i, j);
            std::string ij = "p_" + std::to_string(i) + std::to_string(j);
            for (Index k = 0; k < d; ++k)
                for (Index l = 0; l < d; ++l)
                    check("p d_kl = d_k'l'", p(i, j, diag(sp, k, l)) == diag(sp, rho(k), rho(l)),
                          ij + " d_" + std::to_string(k) + std::to_string(l));
            for (std::uint64_t n = 0; n < samples; ++n) {
                auto X = PointSet::random(sp, rng), Y = PointSet::random(sp, rng);
                auto pX = p(i, j, X);
                check("p(x+y) = px+py", p(i, j, X | Y) == (pX | p(i, j, Y)), ij);
                check("p(-x) = -px", p(i, j, ~X) == ~pX, ij);
                check("ppx = x", p(i, j, pX) == X, ij);
                check("p_ij x = p_ji x", p(j, i, X) == pX, ij);
                for (Index k = 0; k < d; ++k)
                    check("p c_k x = c_k' p x", p(i, j, cyl(k, X)) == cyl(rho(k), pX), ij + " k=" + std::to_string(k));
                for (Index k = 0; k < d; ++k)
                    for (Index l = k + 1; l < d; ++l)
                        check("p p_kl x = p_k'l' p x", p(i, j, p(k, l, X)) == p(rho(k), rho(l), pX),
                              ij + " kl=" + std::to_string(k) + std::to_string(l));
                for (std::size_t t = 0; t < corpus.size(); ++t) {
                    Assignment a, pa;
                    for (auto& v : variables(corpus[t])) {
                        auto Z = PointSet::random(sp, rng);
                        a[v] = Z;
                        pa[v] = p(i, j, Z);
                    }
                    check("p t(x) = rho(t)(p x)", p(i, j, eval(sp, corpus[t], a)) == eval(sp, rename(corpus[t], rho), pa),
                          ij + " " + to_string(corpus[t]));
                }
            }
        }
    return rep;
}

}  // namespace ca
