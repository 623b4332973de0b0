#include "hermitelab/path.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace hermitelab {

std::size_t SamplePath::index_at(double t) const {
    if (values.empty() || t < t0) throw std::out_of_range("SamplePath::index_at: t before path start");
    auto idx = static_cast<std::size_t>(std::floor((t - t0) / dt + 1e-9));
    if (idx >= values.size()) throw std::out_of_range("SamplePath::index_at: t beyond path coverage");
    return idx;
}

std::string format_double(double x) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

void write_csv(const SamplePath& path, const std::string& filename) {
    std::ofstream os(filename, std::ios::binary);
    if (!os) throw std::runtime_error("write_csv: cannot open " + filename);
    os << "time,value\n";
    for (std::size_t i = 0; i < path.values.size(); ++i)
        os << format_double(path.time_at(i)) << ',' << format_double(path.values[i]) << '\n';
}

namespace {

constexpr char kMagic[8] = {'H', 'L', 'P', 'A', 'T', 'H', '0', '1'};

void put_u64(std::ofstream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    os.write(b, 8);
}

std::uint64_t get_u64(std::ifstream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ofstream& os, double d) { put_u64(os, std::bit_cast<std::uint64_t>(d)); }
double get_f64(std::ifstream& is) { return std::bit_cast<double>(get_u64(is)); }

} // namespace

void write_binary(const SamplePath& path, const std::string& filename) {
    std::ofstream os(filename, std::ios::binary);
    if (!os) throw std::runtime_error("write_binary: cannot open " + filename);
    os.write(kMagic, 8);
    put_u64(os, path.model.size());
    os.write(path.model.data(), static_cast<std::streamsize>(path.model.size()));
    put_f64(os, path.dt);
    put_f64(os, path.t0);
    put_u64(os, path.seed);
    put_u64(os, path.rng_stream);
    put_u64(os, path.values.size());
    for (double v : path.values) put_f64(os, v);
}

SamplePath read_binary(const std::string& filename) {
    std::ifstream is(filename, std::ios::binary);
    if (!is) throw std::runtime_error("read_binary: cannot open " + filename);
    char magic[8];
    is.read(magic, 8);
    if (std::memcmp(magic, kMagic, 8) != 0) throw std::runtime_error("read_binary: bad magic");
    SamplePath p;
    auto mlen = get_u64(is);
    p.model.resize(mlen);
    is.read(p.model.data(), static_cast<std::streamsize>(mlen));
    p.dt = get_f64(is);
    p.t0 = get_f64(is);
    p.seed = get_u64(is);
    p.rng_stream = get_u64(is);
    auto n = get_u64(is);
    p.values.resize(n);
    for (auto& v : p.values) v = get_f64(is);
    if (!is) throw std::runtime_error("read_binary: truncated file");
    return p;
}

} // namespace hermitelab
