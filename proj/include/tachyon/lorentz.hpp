#ifndef TACHYON_LORENTZ_HPP
#define TACHYON_LORENTZ_HPP

#include <array>
#include <vector>

namespace tachyon::lorentz {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    Vec3 normalized() const;
};

/// Four-momentum in the (+,-,-,-) metric; e0 is the energy in natural units.
struct FourVector {
    double e0 = 0.0;
    Vec3 evec;
};

double minkowski_dot(const FourVector& a, const FourVector& b);

/// On-shell tachyon four-momentum: e0 = sqrt(|k|^2 - m^2).
/// Requires |kvec| > m strictly (the mode support excludes the boundary).
FourVector onshell_tachyon(const Vec3& kvec, double m);

/// Pure Lorentz boost with subluminal velocity u, |u| < 1.
class Boost {
  public:
    explicit Boost(const Vec3& u);
    static Boost identity() { return Boost({0, 0, 0}); }

    FourVector apply(const FourVector& k) const;
    const Vec3& velocity() const { return u_; }
    double gamma() const { return gamma_; }
    /// Matrix element Lambda[mu][nu], mu,nu in 0..3. Exposed for the
    /// Lambda^T eta Lambda = eta check.
    double element(int mu, int nu) const { return lambda_[mu][nu]; }

  private:
    Vec3 u_;
    double gamma_;
    std::array<std::array<double, 4>, 4> lambda_;
};

struct InvarianceReport {
    double kprime_mag = 0.0;   // |k'| after the boost
    double mass_param = 0.0;   // m recovered from -k.k
    double margin = 0.0;       // |k'| - m
    bool pass = false;         // |k'| >= m (up to fp tolerance)
};

/// Checks that a boosted on-shell tachyon momentum still satisfies |k'| > m.
/// Requires k spacelike (k.k < 0) and positive m.
InvarianceReport verify_onshell_invariance(const FourVector& k, const Boost& b);

/// Off-shell counterexample: k = (|kvec|/u, kvec) boosted with velocity
/// u*uhat has vanishing spatial part. kvec must be parallel to uhat.
FourVector offshell_counterexample(const Vec3& kvec, const Vec3& uhat, double u);

/// For spacelike k with e0 > 0 returns a boost (parallel to kvec, with
/// 1/v < u < 1 where v = |kvec|/e0 > 1) that flips the energy sign.
/// Throws for timelike or null k: no subluminal boost can flip those.
Boost find_sign_flipping_boost(const FourVector& k);

/// CM-frame elastic scattering of two equal-mass particles psi psi -> psi psi
/// exchanging a scalar of mass parameter m_phi:
///   s = 4(p^2 + m_psi^2),  t = -2p^2(1-cos th),  u = -2p^2(1+cos th).
struct ElasticKinematics {
    double p = 0.0;      // CM three-momentum, > 0
    double m_psi = 0.0;  // external mass, >= 0
    double m_phi = 0.0;  // exchanged mass parameter, > 0

    double s() const { return 4.0 * (p * p + m_psi * m_psi); }
    double t_of(double cos_theta) const { return -2.0 * p * p * (1.0 - cos_theta); }
    double u_of(double cos_theta) const { return -2.0 * p * p * (1.0 + cos_theta); }
};

enum class Channel { T, U };

struct PoleHit {
    Channel channel;
    double cos_theta;
};

/// Scattering angles where the exchanged propagator is hit on its pole,
/// t = -m_phi^2 or u = -m_phi^2. Empty iff 4p^2 < m_phi^2; boundary angles
/// cos th = +-1 appear exactly at 4p^2 = m_phi^2.
std::vector<PoleHit> pole_scan(const ElasticKinematics& kin);

}  // namespace tachyon::lorentz

#endif
