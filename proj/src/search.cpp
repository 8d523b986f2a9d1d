#include "padfa/padfa.hpp"

#include "padfa/error.hpp"

namespace padfa {

namespace {

thread_local std::vector<Code> tl_codes;
thread_local PackedText tl_pattern;

// Recodes and packs the pattern at the index width. False if any byte is
// outside the code map, which can never match an edge.
bool encode_pattern(const Padfa& p, std::string_view pattern, bool terminated) {
  tl_codes.clear();
  tl_codes.reserve(pattern.size() + 1);
  for (unsigned char b : pattern) {
    const Code c = p.cm.code_of(b);
    if (c == kInvalidCode) return false;
    tl_codes.push_back(c);
  }
  if (terminated) tl_codes.push_back(p.cm.terminator());
  if (tl_pattern.width() != p.text.width()) tl_pattern.set_width(p.text.width());
  tl_pattern.assign(tl_codes);
  return true;
}

// The packed search loop: follow the heavy path by one LCP per iteration,
// then one light edge via the branch structure of the current vertex.
// Acceptance is full consumption; in membership mode the caller appended
// the terminator, whose edges only enter accepting sinks.
template <bool Traced>
bool search_core(const Padfa& p, const PackedText& pattern, SearchTrace* trace) {
  const std::uint64_t m = pattern.size();
  std::uint64_t v = 0, consumed = 0;
  while (consumed < m) {
    const std::uint64_t run = lcp_at(p.text, v, pattern, consumed);
    v += run;
    consumed += run;
    SearchTrace::Step step{run, static_cast<std::uint32_t>(v), false, 0, 0};
    if (consumed >= m) {
      if constexpr (Traced) trace->steps.push_back(step);
      break;
    }
    if (!p.light.get(v)) {
      if constexpr (Traced) {
        trace->steps.push_back(step);
        trace->outcome = SearchTrace::Outcome::rejected_no_light_source;
      }
      return false;
    }
    const std::size_t branch = p.light.rank1(v);
    const Code c = pattern.get(consumed);
    step.light_label = c;
    const std::uint32_t pos = p.branches.access(branch, c);
    if (pos == 0) {
      if constexpr (Traced) {
        trace->steps.push_back(step);
        trace->outcome = SearchTrace::Outcome::rejected_branch_miss;
      }
      return false;
    }
    v = p.dest[p.branches.off[branch] + pos - 1];
    ++consumed;
    if constexpr (Traced) {
      step.light_taken = true;
      step.light_dest = static_cast<std::uint32_t>(v);
      trace->steps.push_back(step);
    }
  }
  if constexpr (Traced) trace->outcome = SearchTrace::Outcome::accepted;
  return true;
}

}  // namespace

bool contains(const Padfa& p, std::string_view pattern) {
  if (p.mode != Mode::membership)
    raise(ErrorCode::mode_mismatch, "contains requires a membership-mode index");
  if (!encode_pattern(p, pattern, true)) return false;
  return search_core<false>(p, tl_pattern, nullptr);
}

bool reach(const Padfa& p, std::string_view pattern) {
  if (p.mode != Mode::reach)
    raise(ErrorCode::mode_mismatch, "reach requires a reach-mode index");
  if (!encode_pattern(p, pattern, false)) return false;
  return search_core<false>(p, tl_pattern, nullptr);
}

std::pair<bool, SearchTrace> search_traced(const Padfa& p, std::string_view pattern) {
  SearchTrace trace;
  if (!encode_pattern(p, pattern, p.mode == Mode::membership)) {
    trace.outcome = SearchTrace::Outcome::rejected_unknown_byte;
    return {false, std::move(trace)};
  }
  trace.coded_len = tl_pattern.size();
  const bool found = search_core<true>(p, tl_pattern, &trace);
  return {found, std::move(trace)};
}

std::size_t SearchTrace::light_steps() const {
  std::size_t count = 0;
  for (const Step& s : steps) count += s.light_taken ? 1 : 0;
  return count;
}

std::uint64_t SearchTrace::consumed() const {
  std::uint64_t total = 0;
  for (const Step& s : steps) total += s.heavy_len + (s.light_taken ? 1 : 0);
  return total;
}

}  // namespace padfa
