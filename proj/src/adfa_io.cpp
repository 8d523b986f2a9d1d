#include "padfa/adfa_io.hpp"

#include <zlib.h>

#include <array>
#include <cstring>
#include <fstream>

#include "padfa/error.hpp"

namespace padfa {

namespace {

constexpr char kPlainMagic[8] = {'A', 'D', 'F', 'A', 'P', '1', '\0', '\0'};
constexpr char kPackedMagic[8] = {'P', 'A', 'D', 'F', 'A', '1', '\0', '\0'};
constexpr std::uint32_t kVersion = 1;

void put_u16(std::vector<std::uint8_t>& buf, std::uint16_t x) {
  for (int i = 0; i < 2; ++i) buf.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}
void put_u32(std::vector<std::uint8_t>& buf, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& buf, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

struct Reader {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  std::size_t remaining() const { return data.size() - pos; }
  void need(std::size_t bytes) {
    if (remaining() < bytes) raise(ErrorCode::truncated, "index stream truncated");
  }
  std::uint8_t u8() {
    need(1);
    return data[pos++];
  }
  std::uint16_t u16() {
    need(2);
    std::uint16_t x = 0;
    for (int i = 0; i < 2; ++i) x |= static_cast<std::uint16_t>(data[pos++]) << (8 * i);
    return x;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(data[pos++]) << (8 * i);
    return x;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(data[pos++]) << (8 * i);
    return x;
  }
  std::size_t count(std::size_t width) {
    const std::uint64_t c = u64();
    if (c > remaining() / width) raise(ErrorCode::truncated, "index stream truncated");
    return static_cast<std::size_t>(c);
  }
};

std::uint32_t crc_of(const std::uint8_t* data, std::size_t len) {
  return static_cast<std::uint32_t>(crc32_z(crc32_z(0, nullptr, 0), data, len));
}

}  // namespace

std::uint64_t plain_bits(const Adfa& a) {
  const std::uint64_t n = a.size();
  const std::uint64_t e = a.edge_count();
  return (n + 1) * 32      // CSR offsets
         + e * (16 + 32)   // labels and targets
         + n               // accepting flags
         + 256 * 16;       // code map
}

std::vector<std::uint8_t> serialize_plain(const PlainIndex& p) {
  const Adfa& a = p.adfa;
  std::vector<std::uint8_t> buf;
  buf.reserve(64 + a.size() * 5 + a.edge_count() * 6);
  for (char c : kPlainMagic) buf.push_back(static_cast<std::uint8_t>(c));
  put_u32(buf, kVersion);
  buf.push_back(static_cast<std::uint8_t>(p.mode));
  buf.push_back(0);
  buf.push_back(0);
  buf.push_back(0);
  put_u64(buf, a.size());
  put_u64(buf, p.k);
  put_u64(buf, a.code_map().sigma());
  put_u32(buf, a.root());

  for (int b = 0; b < 256; ++b)
    put_u16(buf, a.code_map().code_of(static_cast<unsigned char>(b)));

  put_u64(buf, a.edge_count());
  for (std::uint32_t v = 0; v < a.size(); ++v)
    put_u32(buf, static_cast<std::uint32_t>(a.out_degree(v)));
  for (std::uint32_t v = 0; v < a.size(); ++v)
    for (const Edge& e : a.edges(v)) {
      put_u16(buf, e.label);
      put_u32(buf, e.to);
    }
  for (std::uint32_t v = 0; v < a.size(); ++v)
    buf.push_back(a.accepting(v) ? 1 : 0);

  put_u32(buf, crc_of(buf.data(), buf.size()));
  return buf;
}

PlainIndex deserialize_plain(std::span<const std::uint8_t> bytes) {
  Reader r{bytes};
  r.need(8);
  if (std::memcmp(bytes.data(), kPlainMagic, 8) != 0)
    raise(ErrorCode::bad_magic, "not a plain index file");
  r.pos = 8;
  const std::uint32_t version = r.u32();
  if (version != kVersion)
    raise(ErrorCode::bad_version, "unsupported index version " + std::to_string(version));

  PlainIndex p;
  const std::uint8_t mode = r.u8();
  if (mode > 1) raise(ErrorCode::malformed, "bad mode flag");
  p.mode = static_cast<Mode>(mode);
  r.u8();
  r.u8();
  r.u8();
  const std::uint64_t n64 = r.u64();
  p.k = r.u64();
  const std::uint64_t sigma = r.u64();
  const std::uint32_t root = r.u32();
  if (n64 > r.remaining()) raise(ErrorCode::truncated, "index stream truncated");
  const auto n = static_cast<std::size_t>(n64);
  if (root >= n && n > 0) raise(ErrorCode::malformed, "root out of range");

  std::array<bool, 256> used{};
  for (int b = 0; b < 256; ++b) used[b] = r.u16() != kInvalidCode;
  CodeMap cm = CodeMap::from_used(used);
  if (cm.sigma() != sigma) raise(ErrorCode::malformed, "code map header mismatch");

  const std::size_t edge_total = r.count(1);
  std::vector<std::uint32_t> degrees(n);
  r.need(n * 4);
  for (auto& d : degrees) d = r.u32();
  std::vector<std::vector<Edge>> lists(n);
  std::size_t seen = 0;
  for (std::size_t v = 0; v < n; ++v) {
    r.need(static_cast<std::size_t>(degrees[v]) * 6);
    lists[v].resize(degrees[v]);
    for (auto& e : lists[v]) {
      e.label = r.u16();
      e.to = r.u32();
      if (e.to >= n) raise(ErrorCode::malformed, "edge target out of range");
    }
    seen += degrees[v];
  }
  if (seen != edge_total) raise(ErrorCode::malformed, "edge count mismatch");
  std::vector<std::uint8_t> accepting(n);
  r.need(n);
  for (auto& f : accepting) f = r.u8();

  if (r.remaining() != 4) raise(ErrorCode::truncated, "index stream truncated");
  if (r.u32() != crc_of(bytes.data(), bytes.size() - 4))
    raise(ErrorCode::checksum_mismatch, "index checksum mismatch");

  p.adfa = Adfa::from_lists(root, lists, accepting, std::move(cm));
  return p;
}

void save_plain(const PlainIndex& p, const std::string& path) {
  const auto bytes = serialize_plain(p);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::io, "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(ErrorCode::io, "write failed for " + path);
}

PlainIndex load_plain(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize_plain(bytes);
}

bool is_packed_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io, "cannot open " + path);
  char magic[8] = {};
  in.read(magic, 8);
  if (in.gcount() != 8) raise(ErrorCode::truncated, "file shorter than a magic header");
  if (std::memcmp(magic, kPackedMagic, 8) == 0) return true;
  if (std::memcmp(magic, kPlainMagic, 8) == 0) return false;
  raise(ErrorCode::bad_magic, path + " is not an index file");
}

}  // namespace padfa
