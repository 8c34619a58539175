#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pda.hpp"

namespace pda {

/// N files split into F packets each. Files are zero-padded to a common
/// length (the least multiple of F covering the longest file); the true
/// lengths are kept so decoding can strip the padding again.
class FileLibrary {
public:
    /// Throws std::invalid_argument on an empty library or division < 1.
    FileLibrary(std::vector<std::vector<std::uint8_t>> files, int division);

    /// Deterministic library: every file holds `file_len` bytes drawn from
    /// a mt19937_64 stream seeded with `seed`.
    static FileLibrary seeded(int n_files, std::size_t file_len, int division,
                              std::uint64_t seed);

    int file_count() const { return static_cast<int>(originals_.size()); } // N
    int division() const { return division_; }                             // F
    std::size_t packet_len() const { return packet_len_; }
    std::size_t padded_len() const { return packet_len_ * static_cast<std::size_t>(division_); }

    /// Packet j of file i (both 1-based).
    std::span<const std::uint8_t> packet(int file, int index) const;

    /// The original, unpadded bytes of file i.
    const std::vector<std::uint8_t>& original(int file) const;

private:
    int division_ = 0;
    std::size_t packet_len_ = 0;
    std::vector<std::vector<std::uint8_t>> originals_;
    std::vector<std::vector<std::uint8_t>> padded_;
};

/// The packets user k stores after placement: exactly
/// {(i,j) : pda[j,k] = star, i in 1..N}.
class UserCache {
public:
    explicit UserCache(int user) : user_(user) {}

    int user() const { return user_; }
    void insert(int file, int packet_index, std::span<const std::uint8_t> bytes);
    bool contains(int file, int packet_index) const;
    /// Throws std::runtime_error when the packet was never cached.
    std::span<const std::uint8_t> packet(int file, int packet_index) const;

    std::size_t packet_count() const { return packets_.size(); }
    std::size_t total_bytes() const;
    /// Sorted (file, packet) ids, for comparisons against expected caches.
    std::vector<std::pair<int, int>> packet_ids() const;

private:
    int user_ = 0;
    std::map<std::pair<int, int>, std::vector<std::uint8_t>> packets_;
};

/// The length-K request vector; entry k is the file index user k wants.
struct Demand {
    std::vector<int> files;

    std::string str() const; // "d1,d2,...,dK"
};

/// One delivery time slot: the XOR of packets W_{d_k,j} over the cells
/// (j,k) holding this symbol.
struct BroadcastMessage {
    int symbol = 0;
    std::vector<std::uint8_t> payload;
    std::vector<CellRef> contributors; // row-major order
};

struct SimReport {
    std::vector<bool> user_ok;
    int symbols = 0;  // S
    int division = 0; // F
    Rational rate;    // S/F, reduced
    std::size_t cache_bytes = 0;       // per user
    std::size_t transmitted_bytes = 0; // S * packet_len

    bool all_ok() const;
    /// "users_ok=<0/1 per user> S=<S> rate=<S>/<F> cache_bytes=<int>"
    std::string summary() const;
};

/// Placement phase. Caller guarantees the PDA is valid.
std::vector<UserCache> place(const Pda& pda, const FileLibrary& lib);

/// Delivery phase: one message per symbol, in symbol order 1..S.
/// Throws std::invalid_argument when the demand is malformed.
std::vector<BroadcastMessage> deliver(const Pda& pda, const FileLibrary& lib, const Demand& d);

/// Recovers user k's requested file, byte-exact, from the cache and the
/// broadcasts alone; `original_len` is the file's true length (ordinary
/// header metadata), used to strip the zero padding. Throws
/// std::runtime_error if a contributor packet is missing from the cache
/// (an invalid PDA slipped through).
std::vector<std::uint8_t> decode(const Pda& pda, int user, const UserCache& cache,
                                 const std::vector<BroadcastMessage>& messages, const Demand& d,
                                 std::size_t original_len);

/// Full round: validate, place, deliver, decode every user, compare against
/// the originals. Throws std::invalid_argument (citing the first witness)
/// when the PDA is invalid.
SimReport run_end_to_end(const Pda& pda, const FileLibrary& lib, const Demand& d);

/// Visits every demand vector in {1..n_files}^users in lexicographic order.
void for_each_demand(int n_files, int users, const std::function<void(const Demand&)>& fn);

} // namespace pda
