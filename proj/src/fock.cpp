#include "tachyon/fock.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace tachyon::fock {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

bool is_integer(const Rational& r, long long v) {
    return r.denominator() == 1 && r.numerator() == v;
}

}  // namespace

std::string Scalar::str() const {
    if (im.numerator() == 0) return rational_str(re);
    std::string imag;
    if (is_integer(im, 1)) {
        imag = "i";
    } else if (is_integer(im, -1)) {
        imag = "-i";
    } else {
        imag = rational_str(im) + "i";
    }
    if (re.numerator() == 0) return imag;
    std::string out = "(" + rational_str(re);
    if (im.numerator() > 0) out += "+";
    out += imag + ")";
    return out;
}

ModeLabel ModeLabel::negated() const {
    ModeLabel out = *this;
    if (!out.wraps_.empty() && out.wraps_.back() == Wrap::Negate) {
        out.wraps_.pop_back();  // -(-p) = p
    } else {
        out.wraps_.push_back(Wrap::Negate);
    }
    return out;
}

ModeLabel ModeLabel::boosted() const {
    ModeLabel out = *this;
    out.wraps_.push_back(Wrap::BoostImage);
    return out;
}

bool ModeLabel::is_negated() const {
    return !wraps_.empty() && wraps_.back() == Wrap::Negate;
}

std::string ModeLabel::str() const {
    std::string out;
    for (auto it = wraps_.rbegin(); it != wraps_.rend(); ++it) {
        out += (*it == Wrap::Negate) ? "−" : "Λ";  // minus sign, capital Lambda
    }
    return out + base_;
}

LadderOp LadderOp::adjoint() const {
    return {kind == Kind::Create ? Kind::Annihilate : Kind::Create, space, label};
}

LadderOp LadderOp::starred() const {
    return {kind, space == Space::Direct ? Space::Dual : Space::Direct, label};
}

std::strong_ordering LadderOp::operator<=>(const LadderOp& o) const {
    // direct factors before dual ones; creator-like before annihilator-like;
    // labels break ties (same-class operators commute, so this is a free choice)
    if (auto c = space <=> o.space; c != 0) return c;
    if (auto c = (!creator_like()) <=> (!o.creator_like()); c != 0) return c;
    return label <=> o.label;
}

std::string LadderOp::str() const {
    std::string name = "a";
    if (space == Space::Dual) name += "⋆";   // star
    if (kind == Kind::Create) name += "†";   // dagger
    return name + "(" + label.str() + ")";
}

LadderOp annihilate(ModeLabel l) { return {Kind::Annihilate, Space::Direct, std::move(l)}; }
LadderOp create(ModeLabel l) { return {Kind::Create, Space::Direct, std::move(l)}; }
LadderOp dual_annihilate(ModeLabel l) { return {Kind::Annihilate, Space::Dual, std::move(l)}; }
LadderOp dual_create(ModeLabel l) { return {Kind::Create, Space::Dual, std::move(l)}; }

DeltaWeight::DeltaWeight(ModeLabel a, ModeLabel b) : lo_(std::move(a)), hi_(std::move(b)) {
    // delta^3(p-q) and omega_p are both even under a joint sign flip
    if (lo_.is_negated() && hi_.is_negated()) {
        lo_ = lo_.negated();
        hi_ = hi_.negated();
    }
    if (hi_ < lo_) std::swap(lo_, hi_);
}

std::string DeltaWeight::str() const {
    return "Δ(" + lo_.str() + "," + hi_.str() + ")";
}

OperatorExpr OperatorExpr::identity(Scalar c) {
    OperatorExpr e;
    e.add_term(Key{}, c);
    return e;
}

OperatorExpr OperatorExpr::from_op(LadderOp op, Scalar c) {
    OperatorExpr e;
    e.add_term(Key{{}, {std::move(op)}}, c);
    return e;
}

OperatorExpr OperatorExpr::delta(const ModeLabel& a, const ModeLabel& b, int sign) {
    OperatorExpr e;
    e.add_term(Key{{DeltaWeight(a, b)}, {}}, Scalar::integer(sign));
    return e;
}

void OperatorExpr::add_term(Key k, Scalar c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(k), c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& o) const {
    OperatorExpr out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

OperatorExpr OperatorExpr::operator-(const OperatorExpr& o) const {
    OperatorExpr out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

OperatorExpr OperatorExpr::operator-() const {
    OperatorExpr out;
    for (const auto& [k, c] : terms_) out.add_term(k, -c);
    return out;
}

OperatorExpr OperatorExpr::scaled(const Scalar& s) const {
    OperatorExpr out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.add_term(k, c * s);
    return out;
}

OperatorExpr OperatorExpr::operator*(const OperatorExpr& o) const {
    OperatorExpr out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key k;
            k.deltas = ka.deltas;
            k.deltas.insert(k.deltas.end(), kb.deltas.begin(), kb.deltas.end());
            std::sort(k.deltas.begin(), k.deltas.end());
            k.ops = ka.ops;
            k.ops.insert(k.ops.end(), kb.ops.begin(), kb.ops.end());
            out.add_term(std::move(k), ca * cb);
        }
    }
    return out;
}

OperatorExpr OperatorExpr::normalized() const {
    OperatorExpr out;
    struct Work {
        std::vector<DeltaWeight> deltas;
        std::vector<LadderOp> ops;
        Scalar coef;
    };
    std::deque<Work> todo;
    for (const auto& [k, c] : terms_) todo.push_back({k.deltas, k.ops, c});

    while (!todo.empty()) {
        Work w = std::move(todo.front());
        todo.pop_front();
        bool requeued = false;
        for (bool again = true; again && !requeued;) {
            again = false;
            for (std::size_t i = 0; i + 1 < w.ops.size(); ++i) {
                if (!(w.ops[i + 1] < w.ops[i])) continue;
                const LadderOp& a = w.ops[i];
                const LadderOp& b = w.ops[i + 1];
                if (a.space == b.space && !a.creator_like() && b.creator_like()) {
                    // X Y = Y X + Delta(x,y): both the direct-space CCR and its
                    // dual image [a*dag_q, a*_p] = Delta(p,q) have this shape.
                    Work contracted;
                    contracted.coef = w.coef;
                    contracted.deltas = w.deltas;
                    contracted.deltas.emplace_back(a.label, b.label);
                    std::sort(contracted.deltas.begin(), contracted.deltas.end());
                    contracted.ops.assign(w.ops.begin(), w.ops.begin() + i);
                    contracted.ops.insert(contracted.ops.end(), w.ops.begin() + i + 2,
                                          w.ops.end());
                    std::swap(w.ops[i], w.ops[i + 1]);
                    todo.push_back(std::move(contracted));
                    todo.push_back(std::move(w));
                    requeued = true;
                    break;
                }
                std::swap(w.ops[i], w.ops[i + 1]);  // exactly commuting factors
                again = true;
            }
        }
        if (!requeued) {
            out.add_term(Key{std::move(w.deltas), std::move(w.ops)}, w.coef);
        }
    }
    return out;
}

bool OperatorExpr::is_zero() const { return normalized().terms_.empty(); }

bool OperatorExpr::equals(const OperatorExpr& o) const {
    return normalized().terms_ == o.normalized().terms_;
}

std::size_t OperatorExpr::term_count() const { return normalized().terms_.size(); }

std::vector<OperatorExpr::Term> OperatorExpr::terms() const {
    const OperatorExpr n = normalized();
    std::vector<Term> out;
    out.reserve(n.terms_.size());
    for (const auto& [k, c] : n.terms_) out.push_back({c, k.deltas, k.ops});
    return out;
}

OperatorExpr OperatorExpr::adjoint() const {
    OperatorExpr out;
    for (const auto& [k, c] : terms_) {
        Key nk;
        nk.deltas = k.deltas;
        nk.ops.reserve(k.ops.size());
        for (auto it = k.ops.rbegin(); it != k.ops.rend(); ++it) nk.ops.push_back(it->adjoint());
        out.add_term(std::move(nk), c.conj());
    }
    return out;
}

std::string OperatorExpr::str() const {
    const auto ts = terms();
    if (ts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : ts) {
        Scalar c = t.coef;
        const bool neg = c.re.numerator() < 0 || (c.re.numerator() == 0 && c.im.numerator() < 0);
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::vector<std::string> factors;
        if (!(c == Scalar::one()) || (t.deltas.empty() && t.ops.empty())) {
            factors.push_back(c.str());
        }
        for (const auto& d : t.deltas) factors.push_back(d.str());
        for (const auto& op : t.ops) factors.push_back(op.str());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "·";
            out += factors[i];
        }
    }
    return out;
}

namespace {

Space single_space_of(const OperatorExpr& e) {
    bool has_direct = false, has_dual = false;
    for (const auto& t : e.terms()) {
        for (const auto& op : t.ops) {
            (op.space == Space::Direct ? has_direct : has_dual) = true;
        }
    }
    if (has_direct && has_dual) {
        throw std::invalid_argument("star: expression mixes direct and dual spaces");
    }
    return has_dual ? Space::Dual : Space::Direct;
}

}  // namespace

OperatorExpr star(const OperatorExpr& a, StarConvention conv) {
    single_space_of(a);
    OperatorExpr out;
    for (const auto& [k, c] : a.terms_) {
        OperatorExpr::Key nk;
        nk.deltas = k.deltas;
        nk.ops.reserve(k.ops.size());
        for (auto it = k.ops.rbegin(); it != k.ops.rend(); ++it) nk.ops.push_back(it->starred());
        out.add_term(std::move(nk), conv == StarConvention::Adjoint ? c.conj() : c);
    }
    return out;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
    return (a * b - b * a).normalized();
}

OperatorExpr twin_annihilator(const ModeLabel& k, StarConvention conv) {
    const LadderOp dual_part = (conv == StarConvention::Transpose)
                                   ? dual_annihilate(k)
                                   : dual_create(k);
    return OperatorExpr::from_op(annihilate(k)) + OperatorExpr::from_op(dual_part);
}

OperatorExpr twin_creator(const ModeLabel& k, StarConvention conv) {
    return twin_annihilator(k, conv).adjoint();
}

OperatorExpr boost_image(const OperatorExpr& a, bool energy_sign_flip) {
    OperatorExpr out;
    auto map_label = [&](const ModeLabel& l) {
        ModeLabel m = l.boosted();
        return energy_sign_flip ? m.negated() : m;
    };
    for (const auto& [k, c] : a.terms_) {
        OperatorExpr::Key nk;
        nk.deltas.reserve(k.deltas.size());
        for (const auto& d : k.deltas) {
            nk.deltas.emplace_back(map_label(d.first()), map_label(d.second()));
        }
        std::sort(nk.deltas.begin(), nk.deltas.end());
        nk.ops.reserve(k.ops.size());
        for (const auto& op : k.ops) {
            LadderOp m{energy_sign_flip ? (op.kind == Kind::Create ? Kind::Annihilate
                                                                   : Kind::Create)
                                        : op.kind,
                       op.space, map_label(op.label)};
            nk.ops.push_back(std::move(m));
        }
        out.add_term(std::move(nk), c);
    }
    return out;
}

std::vector<StateExpr::Term> StateExpr::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back({c, k.deltas, k.labels});
    return out;
}

std::string StateExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Scalar sc = c;
        const bool neg = sc.re.numerator() < 0 || (sc.re.numerator() == 0 && sc.im.numerator() < 0);
        if (neg) sc = -sc;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::vector<std::string> factors;
        if (!(sc == Scalar::one())) factors.push_back(sc.str());
        for (const auto& d : k.deltas) factors.push_back(d.str());
        std::string bra = "⟨";
        if (k.labels.empty()) {
            bra += "0";
        } else {
            for (std::size_t i = 0; i < k.labels.size(); ++i) {
                if (i) bra += ",";
                bra += k.labels[i].str();
            }
        }
        bra += "|";
        factors.push_back(bra);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "·";
            out += factors[i];
        }
    }
    return out;
}

StateExpr dual_vacuum_action(const OperatorExpr& a) {
    const OperatorExpr n = a.normalized();
    StateExpr out;
    for (const auto& [k, c] : n.terms_) {
        bool killed = false;
        std::vector<ModeLabel> labels;
        for (const auto& op : k.ops) {
            if (op.space != Space::Dual) {
                throw std::invalid_argument("dual_vacuum_action: direct-space operator present");
            }
            if (op.kind == Kind::Create) {
                killed = true;  // a-star-dagger annihilates <0|
                break;
            }
            labels.push_back(op.label);
        }
        if (killed) continue;
        std::sort(labels.begin(), labels.end());
        StateExpr::Key key{k.deltas, std::move(labels)};
        auto [it, fresh] = out.terms_.try_emplace(std::move(key), c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

}  // namespace tachyon::fock
