#ifndef GPSUM_FFT_HPP
#define GPSUM_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace gpsum {

// In-place radix-2 complex FFT; n must be a power of two.
// forward: X_k = sum_j x_j e^{-2 pi i jk/n}.  inverse applies the conjugate
// transform and divides by n.
void fft(std::vector<std::complex<double>>& data, bool inverse);

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace gpsum

#endif
