#pragma once

#include "rumin/exterior.hpp"
#include "rumin/lie_algebra.hpp"
#include "rumin/matrix.hpp"
#include "rumin/pbw.hpp"
#include "rumin/scalar_linalg.hpp"
#include "rumin/zpbw.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace rumin {

using PbwMatrix = Matrix<PbwElement>;
using ZPbwMatrix = Matrix<ZPbwElement>;

/// Shared context for operators on one algebra: the algebra and its frame.
struct FormSpace {
    Algebra algebra;
    Frame frame;

    explicit FormSpace(Algebra alg) : algebra(std::move(alg)), frame(*algebra) {}
    int dimension() const { return frame.dimension(); }
};

using Space = std::shared_ptr<const FormSpace>;

Space make_space(const Algebra& alg);

/// Operator Omega^k -> Omega^{k+shift} for every k with both degrees in 0..n,
/// stored as one matrix per source degree (rows: target frame, cols: source frame).
template <typename Entry>
class BasicGradedOperator {
public:
    using Block = Matrix<Entry>;

    BasicGradedOperator() = default;
    BasicGradedOperator(Space space, int shift) : space_(std::move(space)), shift_(shift) {
        const int n = space_->dimension();
        blocks_.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            if (has_block(k)) blocks_[static_cast<std::size_t>(k)] = Block(space_->frame.size(k + shift_), space_->frame.size(k));
    }

    static BasicGradedOperator identity(const Space& space) {
        BasicGradedOperator r(space, 0);
        for (int k = 0; k <= space->dimension(); ++k) r.block(k) = Block::identity(space->frame.size(k));
        return r;
    }

    const Space& space() const { return space_; }
    int shift() const { return shift_; }
    int dimension() const { return space_->dimension(); }
    bool has_block(int k) const { return k >= 0 && k <= dimension() && k + shift_ >= 0 && k + shift_ <= dimension(); }
    int min_degree() const { return std::max(0, -shift_); }
    int max_degree() const { return std::min(dimension(), dimension() - shift_); }

    Block& block(int k) {
        check_degree(k);
        return blocks_[static_cast<std::size_t>(k)];
    }
    const Block& block(int k) const {
        check_degree(k);
        return blocks_[static_cast<std::size_t>(k)];
    }

    bool is_zero() const {
        for (int k = min_degree(); k <= max_degree(); ++k)
            if (!block(k).is_zero()) return false;
        return true;
    }

    BasicGradedOperator operator-() const {
        BasicGradedOperator r(space_, shift_);
        for (int k = min_degree(); k <= max_degree(); ++k) r.block(k) = -block(k);
        return r;
    }

    friend BasicGradedOperator operator+(const BasicGradedOperator& a, const BasicGradedOperator& b) {
        check_compatible(a, b);
        BasicGradedOperator r(a.space_, a.shift_);
        for (int k = a.min_degree(); k <= a.max_degree(); ++k) r.block(k) = a.block(k) + b.block(k);
        return r;
    }

    friend BasicGradedOperator operator-(const BasicGradedOperator& a, const BasicGradedOperator& b) {
        check_compatible(a, b);
        BasicGradedOperator r(a.space_, a.shift_);
        for (int k = a.min_degree(); k <= a.max_degree(); ++k) r.block(k) = a.block(k) - b.block(k);
        return r;
    }

    /// Composition: (a * b) applies b first.
    friend BasicGradedOperator operator*(const BasicGradedOperator& a, const BasicGradedOperator& b) {
        if (a.space_ != b.space_) throw ShapeMismatch("operators act on different form spaces");
        BasicGradedOperator r(a.space_, a.shift_ + b.shift_);
        for (int k = r.min_degree(); k <= r.max_degree(); ++k) {
            if (b.has_block(k) && a.has_block(k + b.shift_)) r.block(k) = a.block(k + b.shift_) * b.block(k);
        }
        return r;
    }

    friend bool operator==(const BasicGradedOperator& a, const BasicGradedOperator& b) {
        if (a.space_ != b.space_ || a.shift_ != b.shift_) return false;
        for (int k = a.min_degree(); k <= a.max_degree(); ++k)
            if (!(a.block(k) == b.block(k))) return false;
        return true;
    }

    template <typename F>
    auto map(F&& f) const {
        using Out = decltype(f(std::declval<const Entry&>()));
        BasicGradedOperator<Out> r(space_, shift_);
        for (int k = min_degree(); k <= max_degree(); ++k) r.block(k) = block(k).map(f);
        return r;
    }

private:
    void check_degree(int k) const {
        if (!has_block(k))
            throw DegreeOutOfRange("no block at source degree " + std::to_string(k) + " for shift " +
                                   std::to_string(shift_));
    }
    static void check_compatible(const BasicGradedOperator& a, const BasicGradedOperator& b) {
        if (a.space_ != b.space_ || a.shift_ != b.shift_)
            throw ShapeMismatch("operators with shifts " + std::to_string(a.shift_) + " and " +
                                std::to_string(b.shift_) + " cannot be added");
    }

    Space space_;
    int shift_ = 0;
    std::vector<Block> blocks_;
};

using GradedOperator = BasicGradedOperator<PbwElement>;
using ZGradedOperator = BasicGradedOperator<ZPbwElement>;

/// Multiplies every entry by a scalar.
GradedOperator scale(const GradedOperator& t, const RationalFunction& c);

/// Every entry has differential order 0.
bool is_algebraic(const GradedOperator& t);

/// Block of an algebraic operator as a scalar matrix. Throws NotAlgebraic.
ScalarMatrix scalar_block(const GradedOperator& t, int k);
PbwMatrix to_pbw(const ScalarMatrix& m, const Algebra& alg);

/// Shift -s; entries transposed and mapped through the antipode.
GradedOperator formal_adjoint(const GradedOperator& t);

/// Matrix of the Hodge star Omega^k -> Omega^{n-k}.
PbwMatrix star_matrix(const FormSpace& space, int k);

/// sign(k, n) * star o T o star, where k is the target degree of the block.
using SignRule = std::function<int(int k, int n)>;
GradedOperator star_conjugate(const GradedOperator& t, const SignRule& sign);

int sign_d_type(int k, int n);    // (-1)^{kn+1}
int sign_box_type(int k, int n);  // (-1)^{k(n-k)}

enum class WeightProfile { zero, preserves, strictly_increases, mixed };

std::string to_string(WeightProfile p);
WeightProfile weight_profile(const GradedOperator& t);
/// The zero operator counts as both weight-preserving and strictly increasing.
bool preserves_weight(WeightProfile p);
bool strictly_increases_weight(WeightProfile p);

/// Sum_{j < N0} (I - T)^j for shift-0 T with I - T strictly weight increasing.
/// Throws NotUnipotent or InternalCheckFailed.
GradedOperator invert_unipotent(const GradedOperator& t);

/// Substitutes parameters in every coefficient and rehomes entries on `target`.
GradedOperator specialize(const GradedOperator& t, const Space& target,
                          const std::map<std::string, mpq_class>& bindings);

/// First entry where a and b differ: (source degree, row, col, a - b).
struct Difference {
    int degree = -1;
    std::size_t row = 0;
    std::size_t col = 0;
    std::string difference;
};
std::optional<Difference> first_difference(const GradedOperator& a, const GradedOperator& b);

} // namespace rumin
