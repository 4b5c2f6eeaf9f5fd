#include "tachyon/lorentz.hpp"

#include <cmath>
#include <stdexcept>

namespace tachyon::lorentz {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("normalized: zero vector");
    return {x / n, y / n, z / n};
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.e0 * b.e0 - a.evec.dot(b.evec);
}

FourVector onshell_tachyon(const Vec3& kvec, double m) {
    if (m < 0.0) throw std::domain_error("onshell_tachyon: m must be >= 0");
    const double k2 = kvec.dot(kvec);
    if (k2 <= m * m) throw std::domain_error("onshell_tachyon: need |kvec| > m");
    return {std::sqrt(k2 - m * m), kvec};
}

Boost::Boost(const Vec3& u) : u_(u) {
    const double u2 = u.dot(u);
    if (u2 >= 1.0) throw std::domain_error("Boost: need |u| < 1");
    gamma_ = 1.0 / std::sqrt(1.0 - u2);
    const double uc[3] = {u.x, u.y, u.z};
    lambda_[0][0] = gamma_;
    for (int i = 0; i < 3; ++i) {
        lambda_[0][i + 1] = lambda_[i + 1][0] = -gamma_ * uc[i];
    }
    // spatial block: delta_ij + (gamma-1) u_i u_j / u^2
    const double c = (u2 > 1e-300) ? (gamma_ - 1.0) / u2 : 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            lambda_[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + c * uc[i] * uc[j];
        }
    }
}

FourVector Boost::apply(const FourVector& k) const {
    const double in[4] = {k.e0, k.evec.x, k.evec.y, k.evec.z};
    double out[4] = {0, 0, 0, 0};
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) out[mu] += lambda_[mu][nu] * in[nu];
    }
    return {out[0], {out[1], out[2], out[3]}};
}

InvarianceReport verify_onshell_invariance(const FourVector& k, const Boost& b) {
    const double k2 = minkowski_dot(k, k);
    if (k2 >= 0.0) throw std::domain_error("verify_onshell_invariance: k must be spacelike");
    InvarianceReport rep;
    rep.mass_param = std::sqrt(-k2);
    rep.kprime_mag = b.apply(k).evec.norm();
    rep.margin = rep.kprime_mag - rep.mass_param;
    rep.pass = rep.margin > -1e-9 * std::max(1.0, rep.mass_param);
    return rep;
}

FourVector offshell_counterexample(const Vec3& kvec, const Vec3& uhat, double u) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("offshell_counterexample: need 0 < u < 1");
    const double kmag = kvec.norm();
    if (kmag == 0.0) throw std::domain_error("offshell_counterexample: zero momentum");
    const Vec3 n = uhat.normalized();
    if (kvec.cross(n).norm() > 1e-12 * kmag) {
        throw std::invalid_argument("offshell_counterexample: kvec must be parallel to uhat");
    }
    // E = |k|/u puts the momentum off shell in just the way a boost of
    // velocity u annihilates the spatial part.
    const FourVector k{kmag / u, kvec};
    return Boost(n * u).apply(k);
}

Boost find_sign_flipping_boost(const FourVector& k) {
    if (minkowski_dot(k, k) >= 0.0) {
        throw std::domain_error("find_sign_flipping_boost: only spacelike momenta can flip");
    }
    if (k.e0 <= 0.0) throw std::domain_error("find_sign_flipping_boost: need e0 > 0");
    const double v = k.evec.norm() / k.e0;  // > 1 for spacelike k
    const double u = 0.5 * (1.0 / v + 1.0);  // midpoint of (1/v, 1)
    return Boost(k.evec.normalized() * u);
}

std::vector<PoleHit> pole_scan(const ElasticKinematics& kin) {
    if (!(kin.p > 0.0)) throw std::domain_error("pole_scan: need p > 0");
    if (!(kin.m_phi > 0.0)) throw std::domain_error("pole_scan: need m_phi > 0");
    std::vector<PoleHit> hits;
    // t(th) = -m_phi^2  <=>  cos th = 1 - m_phi^2/(2p^2); u-channel mirror.
    const double c = 1.0 - kin.m_phi * kin.m_phi / (2.0 * kin.p * kin.p);
    if (c >= -1.0) {
        hits.push_back({Channel::T, c});
        hits.push_back({Channel::U, -c});
    }
    return hits;
}

}  // namespace tachyon::lorentz
