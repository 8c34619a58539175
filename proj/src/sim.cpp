#include "sim.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace pda {

FileLibrary::FileLibrary(std::vector<std::vector<std::uint8_t>> files, int division)
    : division_(division), originals_(std::move(files)) {
    if (originals_.empty())
        throw std::invalid_argument("FileLibrary: need at least one file");
    if (division_ < 1)
        throw std::invalid_argument("FileLibrary: division must be >= 1");

    std::size_t longest = 0;
    for (const auto& f : originals_)
        longest = std::max(longest, f.size());
    // Least multiple of F covering the longest file; all files share it so
    // that XOR across different files is well defined.
    const std::size_t d = static_cast<std::size_t>(division_);
    const std::size_t padded = (longest + d - 1) / d * d;
    packet_len_ = padded / d;

    padded_.reserve(originals_.size());
    for (const auto& f : originals_) {
        std::vector<std::uint8_t> v = f;
        v.resize(padded, 0);
        padded_.push_back(std::move(v));
    }
}

FileLibrary FileLibrary::seeded(int n_files, std::size_t file_len, int division,
                                std::uint64_t seed) {
    if (n_files < 1)
        throw std::invalid_argument("FileLibrary: need at least one file");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint8_t>> files(static_cast<std::size_t>(n_files));
    for (auto& f : files) {
        f.resize(file_len);
        for (auto& byte : f)
            byte = static_cast<std::uint8_t>(rng() & 0xff);
    }
    return FileLibrary(std::move(files), division);
}

std::span<const std::uint8_t> FileLibrary::packet(int file, int index) const {
    if (file < 1 || file > file_count())
        throw std::out_of_range("FileLibrary: file index " + std::to_string(file));
    if (index < 1 || index > division_)
        throw std::out_of_range("FileLibrary: packet index " + std::to_string(index));
    const auto& data = padded_[static_cast<std::size_t>(file - 1)];
    return std::span<const std::uint8_t>(data).subspan(
        static_cast<std::size_t>(index - 1) * packet_len_, packet_len_);
}

const std::vector<std::uint8_t>& FileLibrary::original(int file) const {
    if (file < 1 || file > file_count())
        throw std::out_of_range("FileLibrary: file index " + std::to_string(file));
    return originals_[static_cast<std::size_t>(file - 1)];
}

void UserCache::insert(int file, int packet_index, std::span<const std::uint8_t> bytes) {
    packets_.emplace(std::pair{file, packet_index},
                     std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
}

bool UserCache::contains(int file, int packet_index) const {
    return packets_.count({file, packet_index}) != 0;
}

std::span<const std::uint8_t> UserCache::packet(int file, int packet_index) const {
    const auto it = packets_.find({file, packet_index});
    if (it == packets_.end())
        throw std::runtime_error("UserCache: packet (" + std::to_string(file) + "," +
                                 std::to_string(packet_index) + ") not cached by user " +
                                 std::to_string(user_));
    return it->second;
}

std::size_t UserCache::total_bytes() const {
    std::size_t n = 0;
    for (const auto& [id, bytes] : packets_)
        n += bytes.size();
    return n;
}

std::vector<std::pair<int, int>> UserCache::packet_ids() const {
    std::vector<std::pair<int, int>> ids;
    ids.reserve(packets_.size());
    for (const auto& [id, bytes] : packets_)
        ids.push_back(id);
    return ids;
}

std::string Demand::str() const {
    std::string s;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(files[i]);
    }
    return s;
}

bool SimReport::all_ok() const {
    return std::all_of(user_ok.begin(), user_ok.end(), [](bool b) { return b; });
}

std::string SimReport::summary() const {
    std::string mask;
    mask.reserve(user_ok.size());
    for (bool ok : user_ok)
        mask += ok ? '1' : '0';
    return "users_ok=" + mask + " S=" + std::to_string(symbols) + " rate=" +
           std::to_string(symbols) + "/" + std::to_string(division) +
           " cache_bytes=" + std::to_string(cache_bytes);
}

namespace {

void check_demand(const Pda& p, const FileLibrary& lib, const Demand& d) {
    if (static_cast<int>(d.files.size()) != p.cols())
        throw std::invalid_argument("demand: expected " + std::to_string(p.cols()) +
                                    " entries, got " + std::to_string(d.files.size()));
    for (int f : d.files)
        if (f < 1 || f > lib.file_count())
            throw std::invalid_argument("demand: file index " + std::to_string(f) +
                                        " outside 1.." + std::to_string(lib.file_count()));
}

void xor_into(std::vector<std::uint8_t>& acc, std::span<const std::uint8_t> other) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] ^= other[i];
}

} // namespace

std::vector<UserCache> place(const Pda& p, const FileLibrary& lib) {
    if (lib.division() != p.rows())
        throw std::invalid_argument("place: library division " + std::to_string(lib.division()) +
                                    " does not match F=" + std::to_string(p.rows()));
    std::vector<UserCache> caches;
    caches.reserve(static_cast<std::size_t>(p.cols()));
    for (int k = 1; k <= p.cols(); ++k) {
        UserCache cache(k);
        for (int j = 1; j <= p.rows(); ++j)
            if (p.at(j, k).is_star())
                for (int i = 1; i <= lib.file_count(); ++i)
                    cache.insert(i, j, lib.packet(i, j));
        caches.push_back(std::move(cache));
    }
    return caches;
}

std::vector<BroadcastMessage> deliver(const Pda& p, const FileLibrary& lib, const Demand& d) {
    check_demand(p, lib, d);
    std::vector<BroadcastMessage> messages(static_cast<std::size_t>(p.symbol_count()));
    for (int s = 1; s <= p.symbol_count(); ++s) {
        BroadcastMessage& msg = messages[static_cast<std::size_t>(s - 1)];
        msg.symbol = s;
        msg.payload.assign(lib.packet_len(), 0);
        msg.contributors = p.cells_of_symbol(s);
        for (const CellRef& cell : msg.contributors)
            xor_into(msg.payload, lib.packet(d.files[static_cast<std::size_t>(cell.col - 1)],
                                             cell.row));
    }
    return messages;
}

std::vector<std::uint8_t> decode(const Pda& p, int user, const UserCache& cache,
                                 const std::vector<BroadcastMessage>& messages, const Demand& d,
                                 std::size_t original_len) {
    if (user < 1 || user > p.cols())
        throw std::invalid_argument("decode: user " + std::to_string(user) + " outside 1.." +
                                    std::to_string(p.cols()));
    const int wanted = d.files[static_cast<std::size_t>(user - 1)];

    std::vector<std::uint8_t> file;
    for (int j = 1; j <= p.rows(); ++j) {
        const Cell& cell = p.at(j, user);
        if (cell.is_star()) {
            const auto pkt = cache.packet(wanted, j);
            file.insert(file.end(), pkt.begin(), pkt.end());
            continue;
        }
        // Recover W_{d_user, j} by cancelling every other contributor of
        // this symbol's broadcast with cached packets.
        const BroadcastMessage& msg = messages[static_cast<std::size_t>(cell.sym_id() - 1)];
        std::vector<std::uint8_t> acc = msg.payload;
        int own = 0;
        for (const CellRef& other : msg.contributors) {
            if (other.col == user) {
                // C2 rules out a second contributor in this column.
                if (other.row != j)
                    throw std::logic_error("decode: symbol " + std::to_string(cell.sym_id()) +
                                           " appears twice in column " + std::to_string(user));
                ++own;
                continue;
            }
            xor_into(acc, cache.packet(d.files[static_cast<std::size_t>(other.col - 1)],
                                       other.row));
        }
        if (own != 1)
            throw std::logic_error("decode: cell (" + std::to_string(j) + "," +
                                   std::to_string(user) + ") missing from its own broadcast");
        file.insert(file.end(), acc.begin(), acc.end());
    }

    if (original_len > file.size())
        throw std::invalid_argument("decode: original_len exceeds the padded file size");
    file.resize(original_len);
    return file;
}

SimReport run_end_to_end(const Pda& p, const FileLibrary& lib, const Demand& d) {
    const ValidationReport report = validate(p);
    if (!report.valid())
        throw std::invalid_argument("run_end_to_end: invalid PDA: " +
                                    describe(report.violations.front()));
    check_demand(p, lib, d);

    const auto caches = place(p, lib);
    const auto messages = deliver(p, lib, d);

    SimReport out;
    out.symbols = p.symbol_count();
    out.division = p.rows();
    out.rate = Rational(p.symbol_count(), p.rows());
    out.cache_bytes = caches.front().total_bytes();
    out.transmitted_bytes = 0;
    for (const auto& m : messages)
        out.transmitted_bytes += m.payload.size();

    out.user_ok.reserve(static_cast<std::size_t>(p.cols()));
    for (int k = 1; k <= p.cols(); ++k) {
        const auto& want = lib.original(d.files[static_cast<std::size_t>(k - 1)]);
        const auto decoded =
            decode(p, k, caches[static_cast<std::size_t>(k - 1)], messages, d, want.size());
        out.user_ok.push_back(decoded == want);
    }
    return out;
}

void for_each_demand(int n_files, int users, const std::function<void(const Demand&)>& fn) {
    if (n_files < 1 || users < 1)
        return;
    Demand d;
    d.files.assign(static_cast<std::size_t>(users), 1);
    while (true) {
        fn(d);
        int i = users - 1;
        while (i >= 0 && d.files[static_cast<std::size_t>(i)] == n_files) {
            d.files[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0)
            return;
        ++d.files[static_cast<std::size_t>(i)];
    }
}

} // namespace pda
