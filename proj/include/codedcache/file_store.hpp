#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "codedcache/subpacket.hpp"

namespace codedcache {

inline constexpr std::size_t kDefaultSubpacketBytes = 8;

/// Byte contents of all N files. Every file is F * s bytes; the payload of a
/// sub-packet is the s-byte slice at its canonical local ordinal.
class FileStore {
 public:
  /// Fills files with bytes from a seeded mt19937_64 stream.
  FileStore(const SubPacketUniverse& universe, std::size_t subpacket_bytes, std::uint64_t seed);

  std::size_t subpacket_bytes() const noexcept { return subpacket_bytes_; }
  std::size_t file_bytes() const noexcept { return file_bytes_; }
  int files() const noexcept { return files_; }

  std::span<const std::byte> file(int n) const;
  std::span<const std::byte> slice(std::uint64_t global_ordinal) const;

 private:
  std::size_t subpacket_bytes_;
  std::size_t file_bytes_;
  int files_;
  std::vector<std::byte> data_;
};

}  // namespace codedcache
