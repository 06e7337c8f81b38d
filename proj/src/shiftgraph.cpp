#include "bqo/shiftgraph.hpp"

#include "bqo/order.hpp"

namespace bqo {

int cycle_color(const UpSeq& x) { return cycle_color(x, element_less); }

int cycle_color(const BitWord& x) {
  return cycle_color(x, [](uint8_t a, uint8_t b) { return a < b; });
}

SeqColorer pullback_color(std::function<UpSeq(const UpSeq&)> f,
                          SeqColorer base, bool audit) {
  return [f = std::move(f), base = std::move(base), audit](const UpSeq& x) {
    if (audit && !(f(shift(x)) == shift(f(x))))
      throw PipelineBug("pullback map does not commute with the shift");
    return base(f(x));
  };
}

SeqColorer tail_color(std::function<bool(const UpSeq&)> member,
                      SeqColorer piece) {
  return [member = std::move(member), piece = std::move(piece)](const UpSeq& x) {
    auto e = entry_time(x, member);
    if (!e)
      throw InputError("tail color: orbit never enters the piece");
    return int((piece(shift_n(x, *e)) + *e) % 3);
  };
}

PullbackReport monotone_pullback_check(
    const std::function<Element(const Element&)>& f, const QoSpec& src,
    const QoSpec& dst, const std::vector<std::pair<Element, Element>>& pairs) {
  PullbackReport rep;
  for (const auto& [q, p] : pairs) {
    ++rep.pairs_checked;
    if (leq(src, q, p)) continue;
    Element fq = f(q), fp = f(p);
    if (leq(dst, fq, fp))
      rep.violations.push_back({q, p, std::move(fq), std::move(fp)});
  }
  return rep;
}

}  // namespace bqo
