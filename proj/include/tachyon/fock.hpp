#ifndef TACHYON_FOCK_HPP
#define TACHYON_FOCK_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace tachyon::fock {

using Rational = boost::rational<long long>;

/// Exact Gaussian-rational scalar; the ladder algebra never touches
/// floating point, every identity it verifies holds exactly.
struct Scalar {
    Rational re{0}, im{0};

    static Scalar zero() { return {}; }
    static Scalar one() { return {Rational(1), Rational(0)}; }
    static Scalar i_unit() { return {Rational(0), Rational(1)}; }
    static Scalar integer(long long n) { return {Rational(n), Rational(0)}; }

    Scalar operator+(const Scalar& o) const { return {re + o.re, im + o.im}; }
    Scalar operator-(const Scalar& o) const { return {re - o.re, im - o.im}; }
    Scalar operator*(const Scalar& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Scalar operator-() const { return {-re, -im}; }
    Scalar conj() const { return {re, -im}; }
    // note: integer comparisons go through numerator/denominator; the
    // heterogeneous rational-vs-int operators recurse under C++20 rules
    bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }
    bool operator==(const Scalar& o) const = default;

    std::string str() const;
};

/// Opaque momentum-mode label. Negation and boost-image are free unary
/// constructors; the only simplification is -(-p) = p. The boost image is a
/// formal symbol (no momentum arithmetic happens here).
class ModeLabel {
  public:
    explicit ModeLabel(std::string base) : base_(std::move(base)) {}

    ModeLabel negated() const;
    ModeLabel boosted() const;
    const std::string& base() const { return base_; }
    bool is_negated() const;  // outermost constructor is a negation

    std::string str() const;
    auto operator<=>(const ModeLabel&) const = default;

  private:
    enum class Wrap { Negate, BoostImage };
    std::string base_;
    std::vector<Wrap> wraps_;  // innermost first
};

enum class Kind { Annihilate, Create };
enum class Space { Direct, Dual };

/// One ladder operator over a labeled mode. "Creator-like" means the
/// operator creates on the vacuum of its own space: a-dagger in the direct
/// space, a-star in the dual space (a-star <0| = <k|, a-star-dagger <0| = 0).
struct LadderOp {
    Kind kind;
    Space space;
    ModeLabel label;

    LadderOp adjoint() const;
    LadderOp starred() const;  // flips space, keeps kind
    bool creator_like() const {
        return (kind == Kind::Create) != (space == Space::Dual);
    }
    std::string str() const;

    bool operator==(const LadderOp&) const = default;
    std::strong_ordering operator<=>(const LadderOp& o) const;
};

LadderOp annihilate(ModeLabel l);
LadderOp create(ModeLabel l);
LadderOp dual_annihilate(ModeLabel l);  // a-star
LadderOp dual_create(ModeLabel l);      // a-star-dagger

/// Symbol for (2pi)^3 2 omega_p delta^3(p - q). Symmetric under label
/// exchange; a common negation of both labels cancels (omega is even and the
/// delta depends on the difference).
class DeltaWeight {
  public:
    DeltaWeight(ModeLabel a, ModeLabel b);

    const ModeLabel& first() const { return lo_; }
    const ModeLabel& second() const { return hi_; }
    std::string str() const;

    bool operator==(const DeltaWeight&) const = default;
    auto operator<=>(const DeltaWeight&) const = default;

  private:
    ModeLabel lo_, hi_;
};

/// Star conventions for mapping a direct-space expression into the dual
/// space. Both reverse products; Transpose leaves scalar coefficients alone,
/// Adjoint conjugates them.
enum class StarConvention { Transpose, Adjoint };

class StateExpr;

/// Formal sum of terms coeff * (product of DeltaWeights) * (ordered product of
/// LadderOps). Products are kept as written until normalized(): the normal
/// form orders creator-like before annihilator-like per space (direct factors
/// before dual ones), accumulating the contraction DeltaWeights, and is
/// idempotent.
class OperatorExpr {
  public:
    struct Term {
        Scalar coef;
        std::vector<DeltaWeight> deltas;
        std::vector<LadderOp> ops;
    };

    OperatorExpr() = default;  // zero

    static OperatorExpr identity(Scalar c = Scalar::one());
    static OperatorExpr from_op(LadderOp op, Scalar c = Scalar::one());
    static OperatorExpr delta(const ModeLabel& a, const ModeLabel& b, int sign = +1);

    OperatorExpr operator+(const OperatorExpr& o) const;
    OperatorExpr operator-(const OperatorExpr& o) const;
    OperatorExpr operator*(const OperatorExpr& o) const;
    OperatorExpr operator-() const;
    OperatorExpr scaled(const Scalar& c) const;

    OperatorExpr normalized() const;
    bool is_zero() const;
    bool equals(const OperatorExpr& o) const;
    std::size_t term_count() const;  // after normalization
    std::vector<Term> terms() const; // normalized, deterministic order

    OperatorExpr adjoint() const;

    /// Deterministic rendering of the normal form, e.g. "Δ(p,q)" or
    /// "a†(q)·a(p) + 2·Δ(k,l)".
    std::string str() const;

  private:
    struct Key {
        std::vector<DeltaWeight> deltas;
        std::vector<LadderOp> ops;
        auto operator<=>(const Key&) const = default;
    };
    friend OperatorExpr star(const OperatorExpr&, StarConvention);
    friend OperatorExpr boost_image(const OperatorExpr&, bool);
    friend StateExpr dual_vacuum_action(const OperatorExpr&);

    void add_term(Key k, Scalar c);
    std::map<Key, Scalar> terms_;
};

/// (A o B)* = B* o A*. Input must live entirely in one space; the image
/// lives in the other (dual-of-dual is identified with direct).
OperatorExpr star(const OperatorExpr& a, StarConvention conv);

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

/// Twin-space mode operator c_k = a_k x 1 + 1 x (dual partner of a_k).
/// Under the Transpose convention the dual partner is a-star_k (this is the
/// combination whose commutators all vanish); under Adjoint it is
/// a-star-dagger_k, and [c_k, c_l-dagger] = 2 Delta(k,l) instead.
OperatorExpr twin_annihilator(const ModeLabel& k, StarConvention conv);
OperatorExpr twin_creator(const ModeLabel& k, StarConvention conv);

/// Induced boost action on ladder operators. Without the energy sign flip,
/// labels are rewritten to their boost images. With it, annihilators and
/// creators swap and labels pick up a negation:
///   a_k -> a†_{-Λk},  a†_k -> a_{-Λk}
/// (and the dual-space analogue). DeltaWeight labels ride along; their
/// common negation cancels.
OperatorExpr boost_image(const OperatorExpr& a, bool energy_sign_flip);

/// Formal sum of bra states coeff * <k1,...,kn| built on the dual vacuum.
class StateExpr {
  public:
    struct Term {
        Scalar coef;
        std::vector<DeltaWeight> deltas;
        std::vector<ModeLabel> labels;  // empty = the vacuum bra <0|
    };

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::vector<Term> terms() const;
    std::string str() const;

  private:
    friend StateExpr dual_vacuum_action(const OperatorExpr&);
    struct Key {
        std::vector<DeltaWeight> deltas;
        std::vector<ModeLabel> labels;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, Scalar> terms_;
};

/// Left action of a dual-space expression on the dual vacuum <0|, reduced
/// with a-star_k <0| = <k| and a-star-dagger_k <0| = 0.
StateExpr dual_vacuum_action(const OperatorExpr& a);

}  // namespace tachyon::fock

#endif
