#pragma once

#include "siegel/exactring.hpp"
#include "siegel/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace siegel {

// Index of a Fourier term: a symmetric g x g matrix n with integral diagonal
// and half-integral off-diagonal entries, positive semidefinite.  Stored
// doubled (2n) so all arithmetic is integral; the diagonal of the doubled
// matrix is even.
class FourierIndex {
public:
    // Validates: square symmetric, even diagonal, all principal minors >= 0.
    static FourierIndex validate(const IMat& doubled);
    static FourierIndex zero(Int g);
    static FourierIndex scalar(Int n);  // g = 1, the index (n)

    Int g() const { return g_; }
    const IMat& doubled() const { return doubled_; }
    Int trace() const;                   // trace of n (doubled diagonal is even)
    BigInt det_doubled() const;          // det(2n)
    Rational det() const;                // det(n) = det(2n) / 2^g

    FourierIndex operator+(const FourierIndex& o) const;
    bool operator==(const FourierIndex& o) const { return doubled_.a == o.doubled_.a; }
    bool operator<(const FourierIndex& o) const {  // trace-major, then entry order
        if (g_ != o.g_) return g_ < o.g_;
        Int t = trace(), ot = o.trace();
        if (t != ot) return t < ot;
        return doubled_.a < o.doubled_.a;
    }
    std::string to_string() const;  // upper triangle of the doubled matrix

private:
    FourierIndex(Int g, IMat doubled) : g_(g), doubled_(std::move(doubled)) {}
    Int g_;
    IMat doubled_;
};

// All indices of genus g with trace <= tau (g <= 2).
std::vector<FourierIndex> fourier_indices_up_to(Int g, Int tau);

// Sparse formal Fourier expansion, truncated by trace.
class QExpansion {
public:
    QExpansion(Int g, Int level, std::optional<Int> weight, RingDesc ring, Int tau)
        : g_(g), level_(level), weight_(weight), ring_(std::move(ring)), tau_(tau) {
        check(g_ >= 1, "BadDegree", "degree must be >= 1");
        check(level_ >= 1, "BadLevel", "level must be >= 1");
        check(tau_ >= 0, "BadPrecision", "trace bound must be >= 0");
    }

    Int g() const { return g_; }
    Int level() const { return level_; }
    std::optional<Int> weight() const { return weight_; }
    const RingDesc& ring() const { return ring_; }
    Int tau() const { return tau_; }
    const std::map<FourierIndex, RingValue>& coeffs() const { return coeffs_; }

    void set_weight(std::optional<Int> k) { weight_ = k; }
    // Drops zeros; rejects indices beyond the trace bound or of wrong genus.
    void set_coefficient(const FourierIndex& n, const RingValue& c);
    void add_coefficient(const FourierIndex& n, const RingValue& c);
    RingValue coefficient(const FourierIndex& n) const;
    bool is_zero() const { return coeffs_.empty(); }

    bool operator==(const QExpansion& o) const;

private:
    Int g_;
    Int level_;
    std::optional<Int> weight_;
    RingDesc ring_;
    Int tau_;
    std::map<FourierIndex, RingValue> coeffs_;
};

// Coefficientwise comparison ignoring weight and trace-bound metadata.
bool same_series(const QExpansion& f, const QExpansion& h);

// a*f + b*h; weight is kept only when both inputs agree.
QExpansion qexp_linear(const RingValue& a, const QExpansion& f, const RingValue& b,
                       const QExpansion& h);

// Convolution product; trace bound min(tau_f, tau_h), weights add.
QExpansion qexp_mul(const QExpansion& f, const QExpansion& h);

QExpansion truncate(const QExpansion& f, Int tau);

// Normalised Eisenstein series of even weight k >= 4 (genus 1, level 1,
// rational): 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QExpansion eisenstein(Int k, Int tau);

// The discriminant cusp form q prod (1-q^n)^24 (genus 1, level 1, rational).
QExpansion delta_series(Int tau);

Rational bernoulli(Int k);

// Coefficientwise reduction into F_p (or the extension carrying zeta_image).
QExpansion reduce_mod_p(const QExpansion& f, Int p,
                        const std::optional<RingValue>& zeta_image = std::nullopt);

// Same coefficient table re-read at level 1.
QExpansion reindex_level(const QExpansion& f);

}  // namespace siegel
