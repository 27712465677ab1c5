#pragma once

#include <complex>
#include <cstddef>

namespace addcomb::uniformity {

// Forward complex DFT of fixed length on FFTW-aligned buffers. Planning is
// serialized; execute() is safe from several threads on distinct plans.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::complex<double>* in() { return in_; }
  const std::complex<double>* out() const { return out_; }
  std::size_t size() const { return n_; }
  void execute();

 private:
  std::size_t n_;
  std::complex<double>* in_;
  std::complex<double>* out_;
  void* plan_;
};

}  // namespace addcomb::uniformity
