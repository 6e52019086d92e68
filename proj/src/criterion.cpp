#include "nncurv/criterion.hpp"

namespace nncurv {

PairCheck verifyPair(const Decomposition& dec, const Mat& x, const Mat& y,
                     double tolAccept, double thetaMin, double tolStruct) {
    PairCheck r;
    r.xUnit = Mat(dec.ambient);
    r.yUnit = Mat(dec.ambient);
    double nx = x.norm(), ny = y.norm();
    if (nx < tolStruct || ny < tolStruct) {
        r.reason = "zero vector";
        return r;
    }
    if (spanResidual(x, dec.p) > tolStruct || spanResidual(y, dec.p) > tolStruct) {
        r.reason = "vector outside p";
        return r;
    }
    r.structuralOk = true;
    r.xUnit = x * (1.0 / nx);
    r.yUnit = y * (1.0 / ny);
    r.residual = bracket(r.xUnit, r.yUnit).norm();
    Mat mb = bracket(dec.projM(r.xUnit), dec.projM(r.yUnit));
    r.mBracketNorm = dec.projM(mb).norm();
    if (r.residual > tolAccept)
        r.reason = "commutator nonzero";
    else if (r.mBracketNorm < thetaMin)
        r.reason = "m-bracket below threshold";
    else {
        r.accepted = true;
        r.reason = "ok";
    }
    return r;
}

}  // namespace nncurv
