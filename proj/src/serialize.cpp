#include <zlib.h>

#include <cstring>
#include <fstream>

#include "padfa/error.hpp"
#include "padfa/padfa.hpp"

namespace padfa {

namespace {

constexpr char kMagic[8] = {'P', 'A', 'D', 'F', 'A', '1', '\0', '\0'};
constexpr std::uint32_t kVersion = 1;

struct Writer {
  std::vector<std::uint8_t> buf;

  void u8(std::uint8_t x) { buf.push_back(x); }
  void u16(std::uint16_t x) {
    for (int i = 0; i < 2; ++i) buf.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  }
  void u32(std::uint32_t x) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  }
  void u64(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  }
  void i32(std::int32_t x) { u32(static_cast<std::uint32_t>(x)); }
};

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
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }

  // Count prefix for `width`-byte items, bounds-checked before allocation.
  std::size_t count(std::size_t width) {
    const std::uint64_t c = u64();
    if (c > remaining() / width) raise(ErrorCode::truncated, "index stream truncated");
    return static_cast<std::size_t>(c);
  }
};

void write_fid(Writer& w, const Fid& f) {
  w.u64(f.size());
  w.u64(f.words().size());
  for (std::uint64_t x : f.words()) w.u64(x);
  w.u64(f.supers().size());
  for (std::uint64_t x : f.supers()) w.u64(x);
  w.u64(f.blocks().size());
  for (std::uint16_t x : f.blocks()) w.u16(x);
  w.u64(f.samples().size());
  for (std::uint32_t x : f.samples()) w.u32(x);
}

Fid read_fid(Reader& r) {
  const std::uint64_t n_bits = r.u64();
  std::vector<std::uint64_t> words(r.count(8));
  for (auto& x : words) x = r.u64();
  std::vector<std::uint64_t> supers(r.count(8));
  for (auto& x : supers) x = r.u64();
  std::vector<std::uint16_t> blocks(r.count(2));
  for (auto& x : blocks) x = r.u16();
  std::vector<std::uint32_t> samples(r.count(4));
  for (auto& x : samples) x = r.u32();

  if (words.size() != (n_bits + 63) / 64 ||
      supers.size() != n_bits / Fid::kSuperBits + 1 ||
      blocks.size() != n_bits / Fid::kBlockBits + 1)
    raise(ErrorCode::malformed, "bit-vector directory sizes inconsistent");
  return Fid::from_parts(std::move(words), static_cast<std::size_t>(n_bits),
                         std::move(supers), std::move(blocks), std::move(samples));
}

std::uint32_t crc_of(const std::uint8_t* data, std::size_t len) {
  return static_cast<std::uint32_t>(crc32_z(crc32_z(0, nullptr, 0), data, len));
}

}  // namespace

std::vector<std::uint8_t> serialize(const Padfa& p) {
  Writer w;
  w.buf.reserve(64 + p.text.words().size() * 8 + p.light.words().size() * 9 +
                p.branches.labels.size() * 10 + p.dest.size() * 4 + 512);
  for (char c : kMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u32(kVersion);
  w.u8(static_cast<std::uint8_t>(p.mode));
  w.u8(static_cast<std::uint8_t>(p.backend));
  w.u8(static_cast<std::uint8_t>(p.char_mode));
  w.u8(static_cast<std::uint8_t>(p.text.width()));
  w.u64(p.n());
  w.u64(p.k);
  w.u64(p.cm.sigma());

  for (int b = 0; b < 256; ++b) w.u16(p.cm.code_of(static_cast<unsigned char>(b)));

  w.u64(p.text.words().size());
  for (std::uint64_t x : p.text.words()) w.u64(x);

  write_fid(w, p.light);

  w.u64(p.branches.count());
  for (std::size_t b = 0; b < p.branches.count(); ++b) {
    const std::uint32_t lo = p.branches.off[b], hi = p.branches.off[b + 1];
    w.u16(static_cast<std::uint16_t>(hi - lo));
    for (std::uint32_t i = lo; i < hi; ++i) w.u16(p.branches.labels[i]);
    for (std::uint32_t i = lo; i < hi; ++i) w.u64(p.branches.weights[i]);
    if (p.backend == Backend::biased) {
      for (std::uint32_t i = lo; i < hi; ++i) {
        w.i32(p.branches.left[i]);
        w.i32(p.branches.right[i]);
      }
      w.i32(p.branches.roots[b]);
    }
  }

  w.u8(p.dest_wide ? 8 : 4);
  w.u64(p.dest.size());
  for (std::uint32_t d : p.dest) {
    if (p.dest_wide)
      w.u64(d);
    else
      w.u32(d);
  }

  if (p.mode == Mode::reach) write_fid(w, p.accept_bits);

  w.u32(crc_of(w.buf.data(), w.buf.size()));
  return std::move(w.buf);
}

Padfa deserialize(std::span<const std::uint8_t> bytes) {
  Reader r{bytes};
  r.need(8);
  if (std::memcmp(bytes.data(), kMagic, 8) != 0)
    raise(ErrorCode::bad_magic, "not a packed index file");
  r.pos = 8;
  const std::uint32_t version = r.u32();
  if (version != kVersion)
    raise(ErrorCode::bad_version, "unsupported index version " + std::to_string(version));

  Padfa p;
  const std::uint8_t mode = r.u8();
  const std::uint8_t backend = r.u8();
  const std::uint8_t char_mode = r.u8();
  const std::uint8_t width = r.u8();
  if (mode > 1 || backend > 1 || char_mode > 1 || width < 1 || width > 16)
    raise(ErrorCode::malformed, "bad header flags");
  p.mode = static_cast<Mode>(mode);
  p.backend = static_cast<Backend>(backend);
  p.char_mode = static_cast<CharMode>(char_mode);
  const std::uint64_t n = r.u64();
  p.k = r.u64();
  const std::uint64_t sigma = r.u64();

  std::array<bool, 256> used{};
  std::array<Code, 256> table;
  for (int b = 0; b < 256; ++b) {
    table[b] = r.u16();
    used[b] = table[b] != kInvalidCode;
  }
  p.cm = CodeMap::from_used(used);
  if (p.cm.sigma() != sigma) raise(ErrorCode::malformed, "code map header mismatch");
  for (int b = 0; b < 256; ++b)
    if (p.cm.code_of(static_cast<unsigned char>(b)) != table[b])
      raise(ErrorCode::malformed, "code map is not the dense byte-order recoding");

  std::vector<std::uint64_t> twords(r.count(8));
  for (auto& x : twords) x = r.u64();
  p.text = PackedText::from_words(std::move(twords), static_cast<std::size_t>(n), width);

  p.light = read_fid(r);
  if (p.light.size() != n) raise(ErrorCode::malformed, "light bit length mismatch");

  const std::size_t branch_count = r.count(2);
  p.branches.backend = p.backend;
  p.branches.off.assign(1, 0);
  p.branches.off.reserve(branch_count + 1);
  for (std::size_t b = 0; b < branch_count; ++b) {
    const std::uint16_t cnt = r.u16();
    r.need(static_cast<std::size_t>(cnt) * 10);  // labels + weights at least
    for (std::uint16_t i = 0; i < cnt; ++i) p.branches.labels.push_back(r.u16());
    for (std::uint16_t i = 0; i < cnt; ++i) p.branches.weights.push_back(r.u64());
    if (p.backend == Backend::biased) {
      for (std::uint16_t i = 0; i < cnt; ++i) {
        p.branches.left.push_back(r.i32());
        p.branches.right.push_back(r.i32());
      }
      p.branches.roots.push_back(r.i32());
    }
    p.branches.off.push_back(static_cast<std::uint32_t>(p.branches.labels.size()));
  }

  const std::uint8_t dwidth = r.u8();
  if (dwidth != 4 && dwidth != 8) raise(ErrorCode::malformed, "bad destination width");
  p.dest_wide = dwidth == 8;
  const std::size_t dcount = r.count(dwidth);
  p.dest.reserve(dcount);
  for (std::size_t i = 0; i < dcount; ++i) {
    const std::uint64_t id = p.dest_wide ? r.u64() : r.u32();
    if (id >= n) raise(ErrorCode::malformed, "destination id out of range");
    p.dest.push_back(static_cast<std::uint32_t>(id));
  }
  if (p.dest.size() != p.branches.labels.size())
    raise(ErrorCode::malformed, "destination and label counts differ");

  if (p.mode == Mode::reach) {
    p.accept_bits = read_fid(r);
    if (p.accept_bits.size() != n) raise(ErrorCode::malformed, "accepting bit length mismatch");
  }

  if (r.remaining() != 4) raise(ErrorCode::truncated, "index stream truncated");
  const std::uint32_t stored = r.u32();
  if (stored != crc_of(bytes.data(), bytes.size() - 4))
    raise(ErrorCode::checksum_mismatch, "index checksum mismatch");
  return p;
}

void save_index(const Padfa& p, const std::string& path) {
  const auto bytes = serialize(p);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::io, "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(ErrorCode::io, "write failed for " + path);
}

Padfa load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

}  // namespace padfa
