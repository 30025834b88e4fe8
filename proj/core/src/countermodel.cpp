#include "linmod/countermodel.hpp"

#include <numeric>

namespace linmod {

namespace {

struct Slot {
  LetterId letter;
  int arity;  // 0 or 1
};

}  // namespace

std::optional<Countermodel> countermodel_search(const Formula& f, const Signature& sig,
                                                const Frame& frame,
                                                const CountermodelOptions& opts) {
  if (!free_vars(f).empty()) fail(ErrorKind::Input, "countermodel search needs a closed formula");
  if (frame.truncated()) fail(ErrorKind::Input, "countermodel search needs a finite frame");
  if (opts.max_domain < 1) fail(ErrorKind::Input, "domain bound must be at least one");
  if (opts.at_world &&
      (*opts.at_world < 0 || *opts.at_world >= frame.world_count()))
    fail(ErrorKind::Input, "restricted world outside the frame");

  std::vector<Slot> props, monos;
  for (LetterId id = 0; id < static_cast<LetterId>(sig.letters().size()); ++id) {
    int arity = sig.letters()[static_cast<size_t>(id)].arity;
    if (arity == 0)
      props.push_back({id, 0});
    else if (arity == 1)
      monos.push_back({id, 1});
    else
      fail(ErrorKind::Unsupported, "countermodel search over letters of arity two or more");
  }

  const int W = frame.world_count();
  const int max_d = monos.empty() ? 1 : opts.max_domain;

  for (int d = 1; d <= max_d; ++d) {
    const int prop_bits = static_cast<int>(props.size()) * W;
    const int mono_bits = static_cast<int>(monos.size()) * W * d;
    const int bits = prop_bits + mono_bits;
    if (bits >= 63 || (std::uint64_t{1} << bits) > opts.valuation_guard)
      fail(ErrorKind::Guard, "countermodel search space exceeds the valuation guard");

    std::vector<int> elems(static_cast<size_t>(d));
    std::iota(elems.begin(), elems.end(), 0);

    for (std::uint64_t val = 0; val < (std::uint64_t{1} << bits); ++val) {
      PredicateModel m(frame, sig);
      m.set_constant_domain(elems);
      // Bit layout: proposition letter i at world w is bit i*W + w; monadic
      // letter j of element e at world w follows at prop_bits + (j*W + w)*d + e.
      // Captures by value: the model outlives this function when returned.
      auto rule = [props, monos, W, d, prop_bits, val](int w, LetterId letter,
                                                       std::span<const int> args) {
        for (size_t i = 0; i < props.size(); ++i)
          if (props[i].letter == letter)
            return ((val >> (static_cast<int>(i) * W + w)) & 1) != 0;
        for (size_t j = 0; j < monos.size(); ++j)
          if (monos[j].letter == letter)
            return ((val >> (prop_bits + (static_cast<int>(j) * W + w) * d + args[0])) & 1) != 0;
        return false;
      };
      m.set_rule(rule, "search");

      const int lo = opts.at_world.value_or(0);
      const int hi = opts.at_world.value_or(W - 1);
      for (int w = lo; w <= hi; ++w) {
        if (!eval2(m, w, Assignment{}, f, opts.box_mode)) {
          m.set_root(w);
          return Countermodel{std::move(m), w, d, val};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace linmod
