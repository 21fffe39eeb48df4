#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "codedcache/file_store.hpp"
#include "codedcache/placement.hpp"
#include "codedcache/transmission.hpp"

namespace codedcache {

/// Outcome of peeling for one user.
struct DecodeResult {
  int user = 0;
  std::vector<SubPacketId> decoded;  // requested sub-packets recovered from messages
  std::vector<SubPacketId> missing;  // requested sub-packets neither cached nor recovered
  bool complete() const noexcept { return missing.empty(); }
};

/// Fixpoint peeling. Vertex values act as intermediate symbols: a vertex whose
/// constituents are all known has a known value; a message with one unknown
/// vertex value yields it; a known vertex value with one unknown constituent
/// yields that constituent. Never throws on undecodable input.
DecodeResult peel(int user, const DeliveryPlan& plan, const SubPacketUniverse& universe,
                  const CacheContents& cache);

/// As `peel`, but throws DecodeFailure listing the unreachable sub-packets.
std::vector<SubPacketId> peel_decode(int user, const DeliveryPlan& plan,
                                     const SubPacketUniverse& universe, const CacheContents& cache);

/// Byte-level peeling over materialized payloads. Returns the user's
/// reconstruction of its requested file.
std::vector<std::byte> reconstruct_file(int user, const DeliveryPlan& plan,
                                        const SubPacketUniverse& universe,
                                        const CacheContents& cache, const FileStore& store);

struct ByteVerifyReport {
  bool ok = false;
  std::uint64_t seed = 0;
  std::size_t users = 0;
  std::size_t file_bytes = 0;
  std::size_t messages = 0;
};

/// Runs placement, delivery, payload materialization and reconstruction for
/// every user; throws MismatchError naming the first differing offset.
ByteVerifyReport byte_verify(const SystemConfig& cfg, const DemandVector& demand, std::uint64_t seed,
                             std::size_t subpacket_bytes = kDefaultSubpacketBytes);

/// Independent rank check over GF(2). Unknowns are the sub-packets appearing in
/// the plan that `user` does not cache; each message is one equation.
struct OracleResult {
  bool decodable = false;
  std::vector<SubPacketId> unreachable;  // requested sub-packets outside the span
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

inline constexpr std::uint64_t kDefaultOracleBits = std::uint64_t{1} << 28;

/// Throws SizeLimit when equations * unknowns exceeds `max_bits`.
OracleResult gf2_oracle(int user, const DeliveryPlan& plan, const SubPacketUniverse& universe,
                        const CacheContents& cache, std::uint64_t max_bits = kDefaultOracleBits);

}  // namespace codedcache
