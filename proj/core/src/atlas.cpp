#include "entinv/atlas.hpp"

#include <algorithm>
#include <numeric>

#include "entinv/errors.hpp"
#include "entinv/reference_tables.hpp"

namespace entinv {

const ClassRecord* Atlas::find(const Signature& s) const {
  auto it = std::find_if(records.begin(), records.end(), [&s](const ClassRecord& r) { return r.signature == s; });
  return it == records.end() ? nullptr : &*it;
}

const ClassRecord* Atlas::find_label(const std::string& label) const {
  auto it = std::find_if(records.begin(), records.end(), [&label](const ClassRecord& r) { return r.label == label; });
  return it == records.end() ? nullptr : &*it;
}

namespace {

void assign_orbits(Atlas& atlas) {
  const auto groups = orbits(atlas);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t r : groups[g]) atlas.records[r].orbit_id = g;
  }
  atlas.orbit_count = groups.size();
}

Atlas parametric(const Shape& shape, const char* family, const std::vector<tables::ParametricRow>& rows) {
  Atlas atlas{shape, family, canonical_generating_set(3), {}, 0};
  const int d = static_cast<int>(shape.dim(3));
  for (const auto& row : rows) {
    Signature s;
    for (const auto& e : row.signature) s.values.push_back(e.at(d));
    // Rows with a negative invariant do not exist at this d.
    if (std::any_of(s.values.begin(), s.values.end(), [](int x) { return x < 0; })) continue;
    atlas.records.push_back({std::string(row.label), std::move(s), std::string(row.representative), 0});
  }
  return atlas;
}

}  // namespace

Atlas builtin_atlas(const Shape& shape) {
  const auto& dims = shape.dims();
  Atlas atlas;
  if (dims.size() == 3 && dims[0] == 2 && dims[1] == 2) {
    atlas = parametric(shape, "(2,2,d)", tables::family_22d());
  } else if (dims.size() == 3 && dims[0] == 2 && dims[1] == 3) {
    atlas = parametric(shape, "(2,3,d)", tables::family_23d());
  } else if (dims == std::vector<std::size_t>{2, 2, 2, 2}) {
    atlas = Atlas{shape, "(2,2,2,2)", canonical_generating_set(4), {}, 0};
    for (const auto& row : tables::four_qubit_rows()) {
      Signature s;
      s.values.assign(row.signature.begin(), row.signature.end());
      std::string rep = row.representative.empty() ? tables::c33_representative_text(kDefaultC33Parameter)
                                                   : std::string(row.representative);
      atlas.records.push_back({std::string(row.label), std::move(s), std::move(rep), 0});
    }
  } else {
    throw Unsupported("no built-in atlas for this shape");
  }
  assign_orbits(atlas);
  return atlas;
}

std::vector<std::vector<std::size_t>> orbits(const Atlas& atlas) {
  const std::size_t n = atlas.records.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& sigma : shape_symmetries(atlas.shape)) {
    const auto perm = atlas.generating_set.induced_permutation(sigma);
    for (std::size_t r = 0; r < n; ++r) {
      const ClassRecord* image = atlas.find(atlas.records[r].signature.permuted(perm));
      if (image == nullptr) continue;
      const std::size_t a = root(r);
      const std::size_t b = root(static_cast<std::size_t>(image - atlas.records.data()));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Orbits are numbered by their first record in table order.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t k = root(r);
    if (slot[k] == static_cast<std::size_t>(-1)) {
      slot[k] = groups.size();
      groups.emplace_back();
    }
    groups[slot[k]].push_back(r);
  }
  return groups;
}

Classification classify(const State& v, const Atlas& atlas) {
  if (!(v.shape() == atlas.shape)) throw ShapeMismatch("state shape differs from the atlas shape");
  Classification c;
  c.signature = signature(v, atlas.generating_set);
  if (const ClassRecord* r = atlas.find(c.signature)) c.record = *r;
  return c;
}

Classification classify(const State& v) { return classify(v, builtin_atlas(v.shape())); }

}  // namespace entinv
