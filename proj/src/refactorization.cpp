#include "hns/refactorization.hpp"

namespace hns {

BasisPartition::BasisPartition(int dimension, std::vector<class_type> classes)
    : dimension_(dimension), classes_(std::move(classes)), owner_(std::max(dimension, 0), -1) {
  if (dimension_ < 1) throw PreconditionError("partition needs dimension >= 1");
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& cls = classes_[c];
    if (cls.empty()) throw PreconditionError("partition has an empty class");
    std::sort(cls.begin(), cls.end());
    for (BasisIndex i : cls) {
      if (i.label() < 1 || i.label() > dimension_)
        throw PreconditionError("partition index " + std::to_string(i.label()) + " outside 1.." +
                                std::to_string(dimension_));
      if (owner_[i.offset()] != -1)
        throw PreconditionError("partition classes overlap at " + to_string(i));
      owner_[i.offset()] = static_cast<int>(c);
    }
  }
  for (int k = 0; k < dimension_; ++k)
    if (owner_[k] == -1)
      throw PreconditionError("partition misses " + to_string(BasisIndex::from_offset(k)));
  if (owner_[0] != 0) throw PreconditionError("the first partition class must contain e_1");
}

BasisPartition divisor_partition(int dimension, int divisor) {
  if (dimension < 1) throw PreconditionError("divisor_partition: dimension must be >= 1");
  if (divisor < 1 || dimension % divisor != 0)
    throw PreconditionError("divisor_partition: " + std::to_string(divisor) +
                            " does not divide " + std::to_string(dimension));
  std::vector<BasisPartition::class_type> classes(divisor);
  for (int k = 0; k < dimension; ++k) classes[k % divisor].push_back(BasisIndex::from_offset(k));
  return BasisPartition(dimension, std::move(classes));
}

}  // namespace hns
