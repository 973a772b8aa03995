#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace benford {

// FNV-1a, 64-bit. Fixture manifests record this over the file's bytes so
// regenerated fixtures can be checked for drift without storing the data.
class Fnv1a64 {
 public:
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001B3ull;
    }
  }

  std::uint64_t value() const { return hash_; }

  // "fnv1a64:" followed by 16 lowercase hex digits.
  std::string hex() const;

 private:
  std::uint64_t hash_ = 0xCBF29CE484222325ull;
};

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace benford
