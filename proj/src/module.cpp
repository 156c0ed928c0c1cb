#include "ringlab/module.hpp"

#include <algorithm>

#include "ringlab/ideals.hpp"

namespace ringlab {

namespace {

struct Parts {
  std::vector<Idx> ranks;
};

}  // namespace

Idx FiniteModule::add(Idx x, Idx y) const {
  const auto& d = *data_;
  size_t out = 0;
  for (size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    Idx rx = static_cast<Idx>((x / d.strides[i]) % c.reps.size());
    Idx ry = static_cast<Idx>((y / d.strides[i]) % c.reps.size());
    Idx sum = d.base.add(c.reps[rx], c.reps[ry]);
    out += c.elem_to_rank[sum] * d.strides[i];
  }
  return static_cast<Idx>(out);
}

Idx FiniteModule::neg(Idx x) const {
  const auto& d = *data_;
  size_t out = 0;
  for (size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    Idx rx = static_cast<Idx>((x / d.strides[i]) % c.reps.size());
    out += c.elem_to_rank[d.base.neg(c.reps[rx])] * d.strides[i];
  }
  return static_cast<Idx>(out);
}

Idx FiniteModule::scalar(Idx a, Idx x) const {
  const auto& d = *data_;
  size_t out = 0;
  for (size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    Idx rx = static_cast<Idx>((x / d.strides[i]) % c.reps.size());
    out += c.elem_to_rank[d.base.mul(a, c.reps[rx])] * d.strides[i];
  }
  return static_cast<Idx>(out);
}

Value FiniteModule::decode(Idx x) const {
  const auto& d = *data_;
  std::vector<Value> vals;
  vals.reserve(d.components.size());
  for (size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    Idx rx = static_cast<Idx>((x / d.strides[i]) % c.reps.size());
    vals.push_back(d.base.decode(c.reps[rx]));
  }
  return Value::tuple(std::move(vals));
}

std::string FiniteModule::format(Idx x) const {
  const auto& d = *data_;
  if (d.components.size() == 1) {
    const auto& c = d.components[0];
    return d.base.format(c.reps[x % c.reps.size()]);
  }
  std::string out = "(";
  for (size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    Idx rx = static_cast<Idx>((x / d.strides[i]) % c.reps.size());
    if (i) out += ",";
    out += d.base.format(c.reps[rx]);
  }
  return out + ")";
}

FiniteModule make_module(const FiniteRing& base, const ModuleSpec& spec, size_t cap) {
  if (spec.components.empty())
    throw RingError("module spec requires at least one component");

  auto data = std::make_shared<FiniteModule::Data>();
  data->base = base;
  data->spec = spec;

  size_t total = 1;
  for (const auto& comp_spec : spec.components) {
    std::vector<Idx> gens;
    gens.reserve(comp_spec.annihilators.size());
    for (int64_t g : comp_spec.annihilators) gens.push_back(base.from_int(g));
    Ideal ann = generated_ideal(base, gens);
    std::vector<Idx> ideal_elems = ann.elems.to_vector();

    FiniteModule::Component comp;
    comp.elem_to_rank.assign(base.size(), 0);
    std::vector<Idx> rep_of(base.size());
    for (Idx e = 0; e < base.size(); ++e) {
      Idx best = e;
      for (Idx i : ideal_elems) best = std::min(best, base.add(e, i));
      rep_of[e] = best;
      if (best == e) comp.reps.push_back(e);
    }
    for (Idx e = 0; e < base.size(); ++e) {
      auto it = std::lower_bound(comp.reps.begin(), comp.reps.end(), rep_of[e]);
      comp.elem_to_rank[e] = static_cast<Idx>(it - comp.reps.begin());
    }

    size_t csize = comp.reps.size();
    if (csize == 0 || total > cap / csize)
      throw CapError("module size overflow", cap + 1, cap);
    data->strides.push_back(total);
    total *= csize;
    data->components.push_back(std::move(comp));
  }
  data->size = total;

  FiniteModule m;
  m.data_ = std::move(data);
  return m;
}

std::string check_module_axioms(const FiniteModule& m) {
  const FiniteRing& r = m.base();
  const size_t ms = m.size(), rs = r.size();

  auto fmt = [&](Idx x) { return m.format(x); };

  for (Idx x = 0; x < ms; ++x) {
    if (m.add(x, m.zero()) != x) return "additive identity fails at " + fmt(x);
    if (m.add(x, m.neg(x)) != m.zero()) return "additive inverse fails at " + fmt(x);
    if (m.scalar(r.one(), x) != x) return "unit scalar fails at " + fmt(x);
  }
  for (Idx x = 0; x < ms; ++x)
    for (Idx y = 0; y < ms; ++y)
      if (m.add(x, y) != m.add(y, x))
        return "additive commutativity fails at " + fmt(x) + "," + fmt(y);
  for (Idx x = 0; x < ms; ++x)
    for (Idx y = 0; y < ms; ++y)
      for (Idx z = 0; z < ms; ++z)
        if (m.add(m.add(x, y), z) != m.add(x, m.add(y, z)))
          return "additive associativity fails at " + fmt(x) + "," + fmt(y) + "," + fmt(z);

  for (Idx a = 0; a < rs; ++a)
    for (Idx x = 0; x < ms; ++x)
      for (Idx y = 0; y < ms; ++y)
        if (m.scalar(a, m.add(x, y)) != m.add(m.scalar(a, x), m.scalar(a, y)))
          return "scalar distributivity over module addition fails";
  for (Idx a = 0; a < rs; ++a)
    for (Idx b = 0; b < rs; ++b)
      for (Idx x = 0; x < ms; ++x) {
        if (m.scalar(r.add(a, b), x) != m.add(m.scalar(a, x), m.scalar(b, x)))
          return "scalar distributivity over ring addition fails";
        if (m.scalar(r.mul(a, b), x) != m.scalar(a, m.scalar(b, x)))
          return "scalar associativity fails";
      }
  return "";
}

}  // namespace ringlab
