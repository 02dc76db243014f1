#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace kdiff {

/// In-place complex FFT of fixed length backed by FFTW with an owned aligned buffer.
/// Plans are built with FFTW_ESTIMATE so results are reproducible run to run.
/// Neither direction is normalized.
class Fft {
public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;
  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;

  std::span<std::complex<double>> data() { return {buffer_, n_}; }
  std::span<const std::complex<double>> data() const { return {buffer_, n_}; }
  std::size_t size() const { return n_; }

  void forward();
  void backward();

private:
  void release();

  std::size_t n_ = 0;
  std::complex<double>* buffer_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

}  // namespace kdiff
