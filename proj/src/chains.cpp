#include "nncurv/chains.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "nncurv/error.hpp"
#include "nncurv/roots.hpp"

namespace nncurv {

const char* expectedName(ExpectedTag t) {
    switch (t) {
        case ExpectedTag::SymmetricPair: return "SYMMETRIC_PAIR";
        case ExpectedTag::Fails: return "FAILS";
        case ExpectedTag::HoldsProved: return "HOLDS_PROVED";
        case ExpectedTag::HoldsConjectured: return "HOLDS_CONJECTURED";
    }
    return "?";
}

Mat Involution::apply(const Mat& x) const {
    if (kind == Kind::EntryConjugation) {
        Mat r(x.dim());
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t j = 0; j < x.dim(); ++j) r.at(i, j) = x.at(i, j).conj();
        return r;
    }
    return m.matmul(x).matmul(m.conjTranspose());
}

Mat embedAt(const Mat& small, std::size_t ambient,
            const std::vector<std::size_t>& coords) {
    Mat r(ambient);
    for (std::size_t i = 0; i < small.dim(); ++i)
        for (std::size_t j = 0; j < small.dim(); ++j)
            r.at(coords[i], coords[j]) = small.at(i, j);
    return r;
}

Basis embedAllAt(const Basis& b, std::size_t ambient,
                 const std::vector<std::size_t>& coords) {
    Basis out;
    out.reserve(b.size());
    for (const Mat& m : b) out.push_back(embedAt(m, ambient, coords));
    return out;
}

Mat interleavedJ(std::size_t twoN) {
    Mat j(twoN);
    for (std::size_t b = 0; b + 1 < twoN; b += 2) {
        j.at(b, b + 1) = Quat(-1);
        j.at(b + 1, b) = Quat(1);
    }
    return j;
}

namespace {

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> v;
    for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
    return v;
}

Basis soAt(std::size_t amb, std::size_t lo, std::size_t hi) {
    Basis b;
    for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = i + 1; j < hi; ++j) b.push_back(skewE(amb, i, j));
    return b;
}

// Unitary-block subalgebra of so(4) for a fixed 2x2-block complex structure.
Basis u2Block(std::size_t amb, std::size_t c0, std::size_t c1, std::size_t c2,
              std::size_t c3) {
    return {skewE(amb, c0, c1) + skewE(amb, c2, c3), skewE(amb, c0, c2),
            skewE(amb, c1, c3), skewE(amb, c0, c3) + skewE(amb, c1, c2)};
}

Mat idiag(std::size_t n, std::initializer_list<double> ts) {
    Mat m(n);
    std::size_t i = 0;
    for (double t : ts) m.at(i, i) = Quat(0, t), ++i;
    return m;
}

Mat realDiag(std::size_t n, std::initializer_list<double> ts) {
    Mat m(n);
    std::size_t i = 0;
    for (double t : ts) m.at(i, i) = Quat(t), ++i;
    return m;
}

Involution adInv(const Mat& m) {
    Involution s;
    s.kind = Involution::Kind::AdMatrix;
    s.m = m;
    return s;
}

struct G2Data {
    Basis g2;
    RootSystem rs;
    std::vector<std::size_t> longIdx, shortIdx;
};

const G2Data& g2Data() {
    static const G2Data d = [] {
        G2Data r;
        r.g2 = g2Basis();
        Basis torus = maximalTorusIn(r.g2, r.g2, 5);
        r.rs = rootDecomposition(r.g2, torus, 3);
        double minLen = 1e300;
        for (const RootFrame& f : r.rs.pos) minLen = std::min(minLen, f.alpha.norm());
        for (std::size_t i = 0; i < r.rs.pos.size(); ++i)
            (r.rs.pos[i].alpha.norm() > minLen * 1.3 ? r.longIdx : r.shortIdx)
                .push_back(i);
        return r;
    }();
    return d;
}

Basis sl2Of(const RootSystem& rs, std::size_t i) {
    return {rs.pos[i].x, rs.pos[i].y, rs.dualVector(rs.pos[i].alpha)};
}

using Builder = std::function<void(Chain&)>;

const std::map<std::string, Builder>& builders();

// Quaternion unit constants for readability in the tables below.
const Quat I = Quat::i(), J = Quat::j(), K = Quat::k();

void buildL411(Chain& c) {
    c.summary = "t^3 < s(u(3)+u(1)) < su(4)";
    c.field = Field::Complex;
    c.ambient = 4;
    c.g = suBasis(4);
    c.k = embedAllAt(suBasis(3), 4, range(0, 3));
    c.k.push_back(idiag(4, {1, 1, 1, -3}));
    c.h = {idiag(4, {1, 0, 0, -1}), idiag(4, {0, 1, 0, -1}), idiag(4, {0, 0, 1, -1})};
    c.expected = ExpectedTag::Fails;
    c.knownPair = {{skewE(4, 0, 1) + skewE(4, 0, 3), skewE(4, 1, 2) + skewE(4, 2, 3)}};
}

void buildL412(Chain& c) {
    c.summary = "u(2)+so(2) < so(6) < so(7)";
    c.ambient = 7;
    c.g = soBasis(7);
    c.k = soAt(7, 0, 6);
    c.h = u2Block(7, 0, 1, 2, 3);
    c.h.push_back(skewE(7, 4, 5));
    c.expected = ExpectedTag::Fails;
    c.knownPair = {{skewE(7, 0, 4) - skewE(7, 0, 6), skewE(7, 1, 4) + skewE(7, 1, 6)}};
}

void buildL413(Chain& c) {
    c.summary = "u(2)+so(2) < so(5)+so(2) < so(7)";
    c.ambient = 7;
    c.g = soBasis(7);
    c.k = soAt(7, 0, 5);
    c.k.push_back(skewE(7, 5, 6));
    c.h = u2Block(7, 0, 1, 2, 3);
    c.h.push_back(skewE(7, 5, 6));
    c.expected = ExpectedTag::Fails;
    c.knownPair = {{skewE(7, 0, 4) + skewE(7, 0, 5), skewE(7, 1, 4) - skewE(7, 1, 5)}};
}

void buildC333(Chain& c) {
    c.summary = "u(1)^3 < u(3) < sp(3)";
    c.field = Field::Quaternion;
    c.ambient = 3;
    c.g = spBasis(3);
    c.k = uBasis(3);
    c.h = {diagUnit(3, 0, I), diagUnit(3, 1, I), diagUnit(3, 2, I)};
    c.expected = ExpectedTag::Fails;
    c.sigma = adInv(realDiag(3, {0, 0, 0}) + idiag(3, {1, 1, 1}));
    c.pinnedTorus = {diagUnit(3, 0, J), diagUnit(3, 1, J), diagUnit(3, 2, J)};
}

void buildL415(Chain& c, bool fullThird) {
    c.summary = fullThird ? "sp(1)+u(1)+sp(1) < sp(2)+sp(1) < sp(3)"
                          : "sp(1)+u(1)+u(1) < sp(2)+u(1) < sp(3)";
    c.field = Field::Quaternion;
    c.ambient = 3;
    c.g = spBasis(3);
    c.k = embedAllAt(spBasis(2), 3, range(0, 2));
    c.k.push_back(diagUnit(3, 2, I));
    if (fullThird) {
        c.k.push_back(diagUnit(3, 2, J));
        c.k.push_back(diagUnit(3, 2, K));
    }
    c.h = {diagUnit(3, 0, I), diagUnit(3, 0, J), diagUnit(3, 0, K),
           diagUnit(3, 1, I), diagUnit(3, 2, I)};
    if (fullThird) {
        c.h.push_back(diagUnit(3, 2, J));
        c.h.push_back(diagUnit(3, 2, K));
    }
    c.expected = ExpectedTag::Fails;
    Mat x = symF(3, 0, 1) * I + skewE(3, 1, 2) + symF(3, 0, 2) * I;
    Mat y = symF(3, 0, 1) * K + symF(3, 1, 2) * J - symF(3, 0, 2) * K;
    c.knownPair = {{x, y}};
}

void buildL416(Chain& c) {
    c.summary = "t^2 < su(3) < g2";
    c.ambient = 7;
    const G2Data& d = g2Data();
    c.g = d.g2;
    Basis su3 = d.rs.torus;
    for (std::size_t i : d.longIdx) {
        su3.push_back(d.rs.pos[i].x);
        su3.push_back(d.rs.pos[i].y);
    }
    c.k = su3;
    c.h = d.rs.torus;
    c.expected = ExpectedTag::Fails;
}

void buildT65G2(Chain& c) {
    c.summary = "su(2) < so(4) < g2";
    c.ambient = 7;
    const G2Data& d = g2Data();
    c.g = d.g2;
    std::size_t lg = d.longIdx.front();
    std::size_t sh = d.shortIdx.front();
    bool found = false;
    for (std::size_t s : d.shortIdx)
        if (std::fabs(d.rs.pos[lg].alpha.dot(d.rs.pos[s].alpha)) < 1e-6) {
            sh = s;
            found = true;
            break;
        }
    if (!found) throw ConstructionError("g2 chain: no orthogonal short root");
    Basis so4 = sl2Of(d.rs, lg);
    for (const Mat& v : sl2Of(d.rs, sh)) so4.push_back(v);
    c.k = so4;
    c.h = sl2Of(d.rs, lg);
    c.expected = ExpectedTag::HoldsProved;
}

void buildT51(Chain& c, std::size_t n) {
    c.summary = "su(" + std::to_string(n) + ") < so(" + std::to_string(2 * n) +
                ") < so(" + std::to_string(2 * n + 1) + ")";
    c.ambient = 2 * n + 1;
    c.g = soBasis(c.ambient);
    c.k = orthonormalize(soAt(c.ambient, 0, 2 * n));
    Mat j = embedAt(interleavedJ(2 * n), c.ambient, range(0, 2 * n));
    Basis un = commutantIn(c.k, j);
    c.h = complementWithin(un, {j * (1.0 / j.norm())});
    c.expected = ExpectedTag::HoldsProved;
}

void buildSymU(Chain& c, std::size_t n) {
    c.summary = "u(" + std::to_string(n) + ") < so(" + std::to_string(2 * n) +
                ") < so(" + std::to_string(2 * n + 1) + ")";
    c.ambient = 2 * n + 1;
    c.g = soBasis(c.ambient);
    c.k = orthonormalize(soAt(c.ambient, 0, 2 * n));
    Mat j = embedAt(interleavedJ(2 * n), c.ambient, range(0, 2 * n));
    c.h = commutantIn(c.k, j);
    c.expected = ExpectedTag::SymmetricPair;
}

void buildSymSo(Chain& c, std::size_t n) {
    c.summary = "so(" + std::to_string(n) + ") < so(" + std::to_string(n + 1) +
                ") < so(" + std::to_string(n + 2) + ")";
    c.ambient = n + 2;
    c.g = soBasis(c.ambient);
    c.k = soAt(c.ambient, 0, n + 1);
    c.h = soAt(c.ambient, 0, n);
    c.expected = ExpectedTag::SymmetricPair;
}

void buildConjSp(Chain& c, std::size_t n) {
    c.summary = "sp(1)^" + std::to_string(n - 1) + " < sp(1)^" + std::to_string(n) +
                " < sp(" + std::to_string(n) + ")";
    c.field = Field::Quaternion;
    c.ambient = n;
    c.g = spBasis(n);
    for (std::size_t slot = 0; slot < n; ++slot)
        for (const Quat& q : {I, J, K}) {
            c.k.push_back(diagUnit(n, slot, q));
            if (slot + 1 < n) c.h.push_back(diagUnit(n, slot, q));
        }
    c.expected = ExpectedTag::HoldsConjectured;
}

void buildG2So(Chain& c, std::size_t amb) {
    c.summary = "g2 < so(7) < so(" + std::to_string(amb) + ")";
    c.ambient = amb;
    c.g = soBasis(amb);
    c.k = soAt(amb, 0, 7);
    c.h = embedAllAt(g2Data().g2, amb, range(0, 7));
    c.expected = ExpectedTag::HoldsProved;
}

const std::map<std::string, Builder>& builders() {
    static const std::map<std::string, Builder> m = {
        {"L4.1-1", buildL411},
        {"L4.1-2", buildL412},
        {"L4.1-3", buildL413},
        {"L4.1-4",
         [](Chain& c) {
             buildC333(c);
             c.summary = "u(1)^3 < u(3) < sp(3)";
         }},
        {"L4.1-5a", [](Chain& c) { buildL415(c, true); }},
        {"L4.1-5b", [](Chain& c) { buildL415(c, false); }},
        {"L4.1-6", buildL416},
        {"C3.3-1-min",
         [](Chain& c) {
             c.summary = "{0} < so(3) < su(3)";
             c.field = Field::Complex;
             c.ambient = 3;
             c.g = suBasis(3);
             c.k = {skewE(3, 0, 1), skewE(3, 0, 2), skewE(3, 1, 2)};
             c.expected = ExpectedTag::Fails;
             c.sigma = Involution{};
             c.pinnedTorus = {idiag(3, {1, -1, 0}), idiag(3, {0, 1, -1})};
         }},
        {"C3.3-2-min",
         [](Chain& c) {
             c.summary = "so(2) < so(4)+so(3) < so(7)";
             c.ambient = 7;
             c.g = soBasis(7);
             c.k = soAt(7, 0, 4);
             for (const Mat& v : soAt(7, 4, 7)) c.k.push_back(v);
             c.h = {skewE(7, 0, 3)};
             c.expected = ExpectedTag::Fails;
             c.sigma = adInv(realDiag(7, {1, 1, 1, 1, -1, -1, -1}));
             c.pinnedTorus = {skewE(7, 0, 4), skewE(7, 1, 5), skewE(7, 2, 6)};
         }},
        {"C3.3-3-min", buildC333},
        {"C3.3-4-min",
         [](Chain& c) {
             c.summary = "{0} < so(3)+so(3) < so(6)";
             c.ambient = 6;
             c.g = soBasis(6);
             c.k = soAt(6, 0, 3);
             for (const Mat& v : soAt(6, 3, 6)) c.k.push_back(v);
             c.expected = ExpectedTag::Fails;
             c.sigma = adInv(realDiag(6, {1, 1, 1, -1, -1, -1}));
             c.pinnedTorus = {skewE(6, 0, 3), skewE(6, 1, 4), skewE(6, 2, 5)};
         }},
        {"T5.1-n2", [](Chain& c) { buildT51(c, 2); }},
        {"T5.1-n3", [](Chain& c) { buildT51(c, 3); }},
        {"T6.5-sp2",
         [](Chain& c) {
             c.summary = "{0} < sp(1)+sp(1) < sp(2)";
             c.field = Field::Quaternion;
             c.ambient = 2;
             c.g = spBasis(2);
             for (std::size_t slot : {std::size_t(0), std::size_t(1)})
                 for (const Quat& q : {I, J, K}) c.k.push_back(diagUnit(2, slot, q));
             c.expected = ExpectedTag::Fails;
             Mat x(2), y(2);
             x.at(0, 0) = J;
             x.at(0, 1) = Quat(1) + J;
             x.at(1, 0) = Quat(-1) + J;
             x.at(1, 1) = I - K;
             y.at(0, 0) = -I - K;
             y.at(0, 1) = I;
             y.at(1, 0) = I;
             y.at(1, 1) = Quat(0, 0.5, 1, -0.5);
             c.knownPair = {{x, y}};
         }},
        {"T6.5-g2-so4-su2", buildT65G2},
        {"CONJ-sp-n2", [](Chain& c) { buildConjSp(c, 2); }},
        {"CONJ-sp-n3", [](Chain& c) { buildConjSp(c, 3); }},
        {"G2-so7-so8", [](Chain& c) { buildG2So(c, 8); }},
        {"G2-so7-so9", [](Chain& c) { buildG2So(c, 9); }},
        {"C4.5-holds-mixed",
         [](Chain& c) {
             c.summary = "t^2+t^1 < su(3)+t^1 < su(3)+su(2)";
             c.field = Field::Complex;
             c.ambient = 5;
             c.g = embedAllAt(suBasis(3), 5, range(0, 3));
             for (const Mat& v : embedAllAt(suBasis(2), 5, range(3, 5))) c.g.push_back(v);
             c.k = embedAllAt(suBasis(3), 5, range(0, 3));
             c.k.push_back(idiag(5, {0, 0, 0, 1, -1}));
             c.h = {idiag(5, {1, -1, 0, 0, 0}), idiag(5, {0, 1, -1, 0, 0}),
                    idiag(5, {0, 0, 0, 1, -1})};
             c.expected = ExpectedTag::HoldsProved;
         }},
        {"SYM-u2-so4-so5", [](Chain& c) { buildSymU(c, 2); }},
        {"SYM-u3-so6-so7", [](Chain& c) { buildSymU(c, 3); }},
        {"SYM-so3-so4-so5", [](Chain& c) { buildSymSo(c, 3); }},
        {"SYM-so4-so5-so6", [](Chain& c) { buildSymSo(c, 4); }},
        {"SYM-so5-so6-so7", [](Chain& c) { buildSymSo(c, 5); }},
    };
    return m;
}

void validateChain(Chain& c) {
    c.g = orthonormalize(c.g);
    c.k = orthonormalize(c.k);
    c.h = orthonormalize(c.h);
    if (!(c.h.size() < c.k.size() && c.k.size() < c.g.size()))
        throw ConstructionError(c.id + ": inclusions not strict");
    for (const Mat& v : c.k)
        if (!spanContains(c.g, v, 1e-8))
            throw ConstructionError(c.id + ": k not inside g");
    for (const Mat& v : c.h)
        if (!spanContains(c.k, v, 1e-8))
            throw ConstructionError(c.id + ": h not inside k");
    for (const Basis* b : {&c.g, &c.k, &c.h})
        if (closureResidual(*b) > 1e-8)
            throw ConstructionError(c.id + ": basis not closed under bracket");
    if (c.sigma) {
        Basis s = complementWithin(c.g, c.k);
        for (const Mat& v : c.g) {
            Mat twice = c.sigma->apply(c.sigma->apply(v));
            if ((twice - v).norm() > 1e-9)
                throw ConstructionError(c.id + ": involution not of order two");
        }
        for (std::size_t i = 0; i < c.g.size(); ++i)
            for (std::size_t j = i + 1; j < c.g.size(); ++j) {
                Mat lhs = c.sigma->apply(bracket(c.g[i], c.g[j]));
                Mat rhs = bracket(c.sigma->apply(c.g[i]), c.sigma->apply(c.g[j]));
                if ((lhs - rhs).norm() > 1e-9)
                    throw ConstructionError(c.id + ": involution not an automorphism");
            }
        for (const Mat& v : c.k)
            if ((c.sigma->apply(v) - v).norm() > 1e-9)
                throw ConstructionError(c.id + ": fixed set of involution exceeds k");
        for (const Mat& v : s)
            if ((c.sigma->apply(v) + v).norm() > 1e-9)
                throw ConstructionError(c.id + ": involution not -1 on complement of k");
        for (const Mat& v : c.pinnedTorus)
            if (spanResidual(v, s) > 1e-8)
                throw ConstructionError(c.id + ": pinned torus leaves complement of k");
    }
}

}  // namespace

const std::vector<std::string>& catalogIds() {
    static const std::vector<std::string> ids = {
        "L4.1-1", "L4.1-2", "L4.1-3", "L4.1-4", "L4.1-5a", "L4.1-5b", "L4.1-6",
        "C3.3-1-min", "C3.3-2-min", "C3.3-3-min", "C3.3-4-min",
        "T5.1-n2", "T5.1-n3",
        "T6.5-sp2", "T6.5-g2-so4-su2",
        "CONJ-sp-n2", "CONJ-sp-n3",
        "G2-so7-so8", "G2-so7-so9",
        "C4.5-holds-mixed",
        "SYM-u2-so4-so5", "SYM-u3-so6-so7",
        "SYM-so3-so4-so5", "SYM-so4-so5-so6", "SYM-so5-so6-so7",
    };
    return ids;
}

std::vector<CatalogRow> listCatalog() {
    std::vector<CatalogRow> rows;
    for (const std::string& id : catalogIds()) {
        Chain c = buildChain(id);
        rows.push_back({c.id, expectedName(c.expected), c.summary});
    }
    return rows;
}

Chain buildChain(const std::string& id) {
    auto it = builders().find(id);
    if (it == builders().end()) throw std::invalid_argument("unknown chain id: " + id);
    Chain c;
    c.id = id;
    it->second(c);
    validateChain(c);
    return c;
}

}  // namespace nncurv
