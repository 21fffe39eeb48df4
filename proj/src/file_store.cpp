#include "codedcache/file_store.hpp"

#include <cstring>
#include <random>

#include "codedcache/errors.hpp"

namespace codedcache {

FileStore::FileStore(const SubPacketUniverse& universe, std::size_t subpacket_bytes, std::uint64_t seed)
    : subpacket_bytes_(subpacket_bytes),
      file_bytes_(static_cast<std::size_t>(universe.per_file()) * subpacket_bytes),
      files_(universe.config().files()) {
  if (subpacket_bytes == 0) throw SizeError("sub-packet size must be positive");
  data_.resize(file_bytes_ * static_cast<std::size_t>(files_));
  std::mt19937_64 rng(seed);
  std::size_t i = 0;
  for (; i + 8 <= data_.size(); i += 8) {
    const std::uint64_t word = rng();
    std::memcpy(data_.data() + i, &word, 8);
  }
  if (i < data_.size()) {
    const std::uint64_t word = rng();
    std::memcpy(data_.data() + i, &word, data_.size() - i);
  }
}

std::span<const std::byte> FileStore::file(int n) const {
  if (n < 0 || n >= files_) throw RangeError("file " + std::to_string(n) + " out of range");
  return {data_.data() + static_cast<std::size_t>(n) * file_bytes_, file_bytes_};
}

std::span<const std::byte> FileStore::slice(std::uint64_t global_ordinal) const {
  const std::size_t offset = static_cast<std::size_t>(global_ordinal) * subpacket_bytes_;
  if (offset + subpacket_bytes_ > data_.size()) throw RangeError("sub-packet ordinal outside the store");
  return {data_.data() + offset, subpacket_bytes_};
}

}  // namespace codedcache
