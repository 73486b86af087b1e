#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qrec/fp_matrix.hpp"
#include "qrec/quiver.hpp"

namespace qrec {

using DimVector = std::vector<std::size_t>;

/// Finite-dimensional representation of an acyclic quiver over F_p.
///
/// Covariant convention: an arrow a: i -> j carries a linear map R_i -> R_j,
/// stored as a dim(j) x dim(i) matrix. Copies share the immutable payload.
class Rep {
 public:
  Rep(QuiverPtr quiver, Prime p, DimVector dims, std::vector<FpMat> mats);

  static Rep zero(QuiverPtr quiver, Prime p);
  static Rep simple(QuiverPtr quiver, Prime p, Vertex v);

  const QuiverPtr& quiver() const noexcept { return data_->quiver; }
  Prime p() const noexcept { return data_->p; }
  const DimVector& dims() const noexcept { return data_->dims; }
  std::size_t dim(Vertex v) const { return data_->dims.at(v); }
  std::size_t total_dim() const noexcept { return data_->total; }
  const FpMat& mat(ArrowId a) const { return data_->mats.at(a); }
  const std::vector<FpMat>& mats() const noexcept { return data_->mats; }
  bool is_zero() const noexcept { return data_->total == 0; }

  /// Identical data on the same quiver (not isomorphism).
  bool operator==(const Rep& o) const;
  /// Byte key of dims and matrices, for memo tables.
  std::string key() const;

 private:
  struct Data {
    QuiverPtr quiver;
    Prime p;
    DimVector dims;
    std::vector<FpMat> mats;
    std::size_t total;
  };
  std::shared_ptr<const Data> data_;
};

/// Morphism of representations: one matrix per vertex, commuting with every arrow.
class RepMor {
 public:
  /// Validates shapes and every commuting square; throws ContractViolation.
  RepMor(Rep source, Rep target, std::vector<FpMat> comps);

  static RepMor identity(const Rep& m);
  static RepMor zero(const Rep& source, const Rep& target);
  /// Skips the commuting-square check. Only for values known to commute, such
  /// as linear combinations of validated morphisms.
  static RepMor trusted(Rep source, Rep target, std::vector<FpMat> comps);

  const Rep& source() const noexcept { return source_; }
  const Rep& target() const noexcept { return target_; }
  const FpMat& comp(Vertex v) const { return comps_.at(v); }
  const std::vector<FpMat>& comps() const noexcept { return comps_; }

  bool is_zero() const;
  bool is_mono() const;  // injective at every vertex
  bool is_epi() const;   // surjective at every vertex
  bool is_iso() const;

  RepMor operator+(const RepMor& o) const;
  RepMor scaled(FpMat::Entry k) const;
  bool operator==(const RepMor& o) const;

 private:
  struct Unchecked {};
  RepMor(Unchecked, Rep source, Rep target, std::vector<FpMat> comps);
  friend RepMor compose(const RepMor& g, const RepMor& f);

  Rep source_;
  Rep target_;
  std::vector<FpMat> comps_;
};

/// g o f.
RepMor compose(const RepMor& g, const RepMor& f);

/// Per-vertex commuting-square check used by RepMor's constructor.
bool commutes(const Rep& source, const Rep& target, const std::vector<FpMat>& comps);

struct KernelResult {
  Rep object;
  RepMor inclusion;
};

struct CokernelResult {
  Rep object;
  RepMor projection;
};

struct ImageResult {
  Rep object;
  RepMor mono;  // Im f -> target
  RepMor epi;   // source -> Im f
};

KernelResult kernel(const RepMor& f);
CokernelResult cokernel(const RepMor& f);
/// f == compose(mono, epi).
ImageResult image(const RepMor& f);

struct DirectSum {
  Rep object;
  std::vector<RepMor> injections;
  std::vector<RepMor> projections;
};

Rep direct_sum(const QuiverPtr& quiver, Prime p, const std::vector<Rep>& summands);
DirectSum direct_sum_with_maps(const QuiverPtr& quiver, Prime p, const std::vector<Rep>& summands);

/// g with compose(mono, g) == f. Throws ContractViolation when f does not factor.
RepMor factor_through_mono(const RepMor& mono, const RepMor& f);
/// g with compose(g, epi) == f. Throws ContractViolation when f does not factor.
RepMor factor_through_epi(const RepMor& epi, const RepMor& f);

/// Composite matrix along a path of arrows (first arrow applied first).
FpMat path_matrix(const Rep& m, const std::vector<ArrowId>& path);

std::string format_dims(const DimVector& d);

}  // namespace qrec
