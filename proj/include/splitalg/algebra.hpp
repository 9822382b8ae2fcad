#pragma once

// Structure-constant model for algebras with several binary operations,
// dendriform representations and actions, and linear maps between them.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitalg/linear.hpp"

namespace splitalg {

/// Structure constants of a bilinear map L x R -> O: coefficient (i, j, k)
/// is the k-th coordinate of e_i * e_j.
class BilinearOp {
  public:
	BilinearOp() = default;
	BilinearOp(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);
	static BilinearOp square(std::size_t n) { return BilinearOp(n, n, n); }

	std::size_t left_dim() const noexcept { return left_; }
	std::size_t right_dim() const noexcept { return right_; }
	std::size_t out_dim() const noexcept { return out_; }

	Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * right_ + j) * out_ + k]; }
	const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const
	{
		return c_[(i * right_ + j) * out_ + k];
	}

	/// e_i * e_j
	Vector product(std::size_t i, std::size_t j) const;
	void set_product(std::size_t i, std::size_t j, const Vector& v);

	/// Bilinear extension: sum_{i,j} x_i y_j (e_i * e_j).
	Vector evaluate(const Vector& x, const Vector& y) const;

	bool is_zero() const;

	BilinearOp& operator+=(const BilinearOp& other);
	friend BilinearOp operator+(BilinearOp a, const BilinearOp& b) { return a += b; }
	friend bool operator==(const BilinearOp&, const BilinearOp&) = default;

  private:
	std::size_t left_ = 0;
	std::size_t right_ = 0;
	std::size_t out_ = 0;
	std::vector<Rational> c_;
};

inline Vector evaluate(const BilinearOp& op, const Vector& x, const Vector& y) { return op.evaluate(x, y); }

enum class Signature { associative, dendriform, diassociative, triassociative, quadri, six, raw };

std::string_view to_string(Signature s);
std::optional<Signature> signature_from_string(std::string_view s);

/// Required operation names for each signature. Empty for raw.
const std::vector<std::string>& canonical_operations(Signature s);

namespace ops {
inline constexpr const char* mul = "mul";
inline constexpr const char* prec = "prec";
inline constexpr const char* succ = "succ";
inline constexpr const char* dashv = "dashv";
inline constexpr const char* vdash = "vdash";
inline constexpr const char* perp = "perp";
inline constexpr const char* prec_vdash = "prec_vdash";
inline constexpr const char* prec_dashv = "prec_dashv";
inline constexpr const char* succ_vdash = "succ_vdash";
inline constexpr const char* succ_dashv = "succ_dashv";
inline constexpr const char* prec_perp = "prec_perp";
inline constexpr const char* succ_perp = "succ_perp";
inline constexpr const char* prec_l = "prec_l";
inline constexpr const char* succ_l = "succ_l";
inline constexpr const char* prec_r = "prec_r";
inline constexpr const char* succ_r = "succ_r";
} // namespace ops

struct AlgebraSpec {
	std::size_t dimension = 0;
	Signature signature = Signature::raw;
	std::vector<std::string> basis; // cosmetic labels, may be empty
	std::map<std::string, BilinearOp> operations;

	/// All operations of the signature, zero-filled.
	static AlgebraSpec zero(std::size_t n, Signature sig);

	const BilinearOp& op(const std::string& name) const;
	BilinearOp& op(const std::string& name);
	bool has(const std::string& name) const { return operations.count(name) != 0; }

	/// Throws DimensionError / Error on a broken invariant.
	void validate() const;

	friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Module V of a dendriform algebra with actions prec_l, succ_l : D x V -> V
/// and prec_r, succ_r : V x D -> V.
struct RepresentationSpec {
	AlgebraSpec base;
	std::size_t module_dim = 0;
	BilinearOp prec_l, succ_l, prec_r, succ_r;

	static RepresentationSpec zero(const AlgebraSpec& base, std::size_t module_dim);
	/// The algebra acting on itself by its own products.
	static RepresentationSpec adjoint(const AlgebraSpec& dendriform);

	void validate() const;

	friend bool operator==(const RepresentationSpec&, const RepresentationSpec&) = default;
};

/// A dendriform algebra D acting on a dendriform algebra D'.
struct ActionSpec {
	AlgebraSpec base;
	AlgebraSpec target;
	BilinearOp prec_l, succ_l, prec_r, succ_r;

	static ActionSpec self(const AlgebraSpec& dendriform);

	RepresentationSpec representation() const;
	void validate() const;

	friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
};

struct LinearMap {
	std::size_t source_dim = 0;
	std::size_t target_dim = 0;
	Matrix matrix; // target_dim x source_dim
	// Names of the objects the map is declared between, if any.
	std::optional<std::string> source_name;
	std::optional<std::string> target_name;

	LinearMap() = default;
	explicit LinearMap(Matrix m);

	static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }
	static LinearMap scalar(std::size_t n, const Rational& k) { return LinearMap(Matrix::scalar(n, k)); }
	static LinearMap zero(std::size_t source, std::size_t target) { return LinearMap(Matrix(target, source)); }

	Vector apply(const Vector& v) const;
	/// this o other
	LinearMap compose(const LinearMap& other) const;

	void validate() const;

	friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

inline Vector apply(const LinearMap& map, const Vector& v) { return map.apply(v); }

} // namespace splitalg
