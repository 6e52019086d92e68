#include "nncurv/decomposition.hpp"

#include <stdexcept>

#include "nncurv/error.hpp"

namespace nncurv {

namespace {

void checkInvariant(const Basis& actors, const Basis& space, const std::string& what) {
    for (const Mat& a : actors)
        for (const Mat& v : space)
            if (spanResidual(bracket(a, v), space, false) > 1e-9)
                throw ConstructionError(what + " not ad-invariant");
}

}  // namespace

Decomposition decompose(const Chain& chain) {
    Decomposition d;
    d.field = chain.field;
    d.ambient = chain.ambient;
    d.h = chain.h;
    d.m = complementWithin(chain.k, chain.h);
    d.s = complementWithin(chain.g, chain.k);
    d.p = d.m;
    for (const Mat& v : d.s) d.p.push_back(v);
    d.gAdapted = d.h;
    for (const Mat& v : d.p) d.gAdapted.push_back(v);
    if (d.m.empty() || d.s.empty())
        throw ConstructionError(chain.id + ": degenerate splitting");
    checkInvariant(d.h, d.m, chain.id + ": m");
    checkInvariant(chain.k, d.s, chain.id + ": s");
    return d;
}

bool isSymmetricPair(const Basis& k, const Basis& h, double tol) {
    Basis m = complementWithin(k, h);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            Mat br = bracket(m[i], m[j]);
            // residual of br against h, i.e. the part that stays in m
            Mat rem = br - project(br, h);
            if (rem.norm() > tol) return false;
        }
    return true;
}

double metricGt(const Decomposition& dec, double t, const Mat& x, const Mat& y) {
    if (t >= 1.0) throw std::domain_error("fiber scale must satisfy t < 1");
    double vertical = dec.projM(x).inner(dec.projM(y));
    double horizontal = dec.projS(x).inner(dec.projS(y));
    return vertical / (1.0 - t) + horizontal;
}

}  // namespace nncurv
