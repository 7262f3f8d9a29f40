#include "holospec/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace holospec {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

struct KeyHash {
  std::size_t operator()(const ElementKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : k) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

double circ_dist(double a, double b) { return std::abs(wrap_angle(a - b)); }

// Dedup store for canonical matrices.  Keys quantize entries to a tol grid,
// so an element re-derived through a different product order can land one
// cell off, or -- if the sign decision inside canonicalize() was itself
// borderline -- on the key of the opposite sign.  find() probes the
// neighbouring cells of every near-boundary coordinate, for both signs, and
// confirms each candidate entrywise before trusting it.  Assumes elements of
// the input group are separated by much more than tol; a verified collision
// inside one cell is reported loudly instead of being merged.
class KeyStore {
 public:
  explicit KeyStore(double tol) : tol_(tol) {}

  // Payload stored for a matrix equal to m (up to the PSL sign), or kNpos.
  std::size_t find(const Mat2& m) const {
    if (std::size_t hit = find_variant(m); hit != kNpos) return hit;
    return find_variant(-m);
  }

  // Payload already stored for an equal matrix, or stores (m, payload) and
  // returns payload.
  std::size_t insert(const Mat2& m, std::size_t payload) {
    if (std::size_t hit = find(m); hit != kNpos) return hit;
    ElementKey base = canonical_key(m, tol_);
    auto [it, fresh] = map_.emplace(base, mats_.size());
    if (!fresh)
      throw InvariantViolation(
          "distinct matrices collide on the dedup grid; lower tol");
    mats_.push_back(m);
    values_.push_back(payload);
    return payload;
  }

 private:
  std::size_t find_variant(const Mat2& m) const {
    const double verify = 8.0 * tol_;
    for (const ElementKey& k : probe_keys(m)) {
      auto it = map_.find(k);
      if (it == map_.end()) continue;
      if (mats_[it->second].close_to(m, verify)) return values_[it->second];
    }
    return kNpos;
  }

  std::vector<ElementKey> probe_keys(const Mat2& m) const {
    ElementKey base = canonical_key(m, tol_);
    const double coords[8] = {m.a.real(), m.a.imag(), m.b.real(), m.b.imag(),
                              m.c.real(), m.c.imag(), m.d.real(), m.d.imag()};
    int flagged[4];
    int dir[4];
    int nf = 0;
    for (int i = 0; i < 8 && nf < 4; ++i) {
      double q = coords[i] / tol_;
      if (std::abs(q) > 8.5e18) continue;  // saturated slot, probing useless
      double r = q - std::round(q);
      if (std::abs(r) > 0.45) {
        flagged[nf] = i;
        dir[nf] = r > 0.0 ? 1 : -1;
        ++nf;
      }
    }
    std::vector<ElementKey> keys;
    keys.reserve(std::size_t{1} << nf);
    for (int mask = 0; mask < (1 << nf); ++mask) {
      ElementKey k = base;
      for (int b = 0; b < nf; ++b)
        if (mask & (1 << b)) k[flagged[b]] += dir[b];
      keys.push_back(k);
    }
    return keys;
  }

  double tol_;
  std::unordered_map<ElementKey, std::size_t, KeyHash> map_;
  std::vector<Mat2> mats_;
  std::vector<std::size_t> values_;
};

std::string gen_label(std::size_t i, bool inverse) {
  if (i < 26)
    return std::string(1, static_cast<char>((inverse ? 'A' : 'a') + i));
  return (inverse ? "G" : "g") + std::to_string(i);
}

// Shortest first, then lexicographic.
bool word_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<CanonicalElement> ball_enumerate(const GroupPresentation& p,
                                             int max_word_len, double tol,
                                             std::size_t cap,
                                             BallStats* stats) {
  if (max_word_len < 0) throw DomainError("max_word_len must be >= 0");
  if (!(tol > 0.0)) throw DomainError("tol must be positive");

  struct Step {
    Mat2 m;
    std::string label;
  };
  std::vector<Step> steps;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    Mat2 g = canonicalize(p.generators[i].m, tol).m;
    steps.push_back({g, gen_label(i, false)});
    steps.push_back({canonicalize(g.inverse(), tol).m, gen_label(i, true)});
  }

  struct Node {
    Mat2 m;
    std::string word;
  };
  std::vector<Node> nodes;
  KeyStore seen(tol);
  nodes.push_back({Mat2{}, ""});
  seen.insert(Mat2{}, 0);

  std::size_t products = 0;
  std::size_t level_begin = 0, level_end = 1;
  for (int len = 1; len <= max_word_len; ++len) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const Step& s : steps) {
        ++products;
        CanonicalElement next =
            canonicalize(nodes[i].m * s.m, tol, nodes[i].word + s.label);
        std::size_t idx = nodes.size();
        if (seen.insert(next.m, idx) == idx) {
          nodes.push_back({next.m, std::move(next.word)});
          if (nodes.size() > cap)
            throw ExplosionLimit("ball enumeration exceeds the element cap");
        }
      }
    }
    level_begin = level_end;
    level_end = nodes.size();
    if (level_begin == level_end) break;  // ball closed before max_word_len
  }

  // Identify mutually inverse elements; the surviving representative carries
  // the best witness word of the pair.
  std::vector<char> alive(nodes.size(), 1);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!alive[i]) continue;
    Mat2 inv = canonicalize(nodes[i].m.inverse(), tol).m;
    std::size_t j = seen.find(inv);
    if (j == kNpos || j <= i || !alive[j]) continue;
    if (word_less(nodes[j].word, nodes[i].word)) nodes[i] = nodes[j];
    alive[j] = 0;
  }

  std::vector<CanonicalElement> out;
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (alive[i]) out.push_back({nodes[i].m, nodes[i].word});
  std::sort(out.begin(), out.end(),
            [](const CanonicalElement& x, const CanonicalElement& y) {
              return word_less(x.word, y.word);
            });

  if (stats) {
    stats->words_visited = products;
    stats->distinct_elements = nodes.size();
    stats->nonidentity = nodes.size() - 1;
    stats->after_inverse_pairing = out.size();
  }
  return out;
}

namespace {

struct Bucket {
  double l = 0.0, th = 0.0;          // anchor: first member in sort order
  std::vector<std::size_t> members;  // item indices
  long comps = 1;
  std::vector<std::size_t> comp_reps;  // one item index per conjugacy class
  std::vector<std::size_t> comp_of;    // member position -> component id
  int claim_k = 0;                     // 0 while considered primitive
  double claim_root = 0.0;
  bool conflict = false;
  std::vector<std::size_t> hit_comps;  // components reached by some power
};

std::size_t find_bucket_by_coords(const std::vector<Bucket>& buckets, double l,
                                  double th, double tol) {
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    if (buckets[i].l < l - tol) continue;
    if (buckets[i].l > l + tol) break;
    if (circ_dist(buckets[i].th, th) <= tol) return i;
  }
  return kNpos;
}

}  // namespace

SpectrumTable build_spectrum(const std::vector<CanonicalElement>& elements,
                             double y, double bucket_tol, double matrix_tol,
                             bool assert_complete, SpectrumBuildStats* stats) {
  if (!(y > 0.0) || !std::isfinite(y))
    throw DomainError("spectrum horizon must be positive and finite");
  if (!(bucket_tol > 0.0)) throw DomainError("bucket_tol must be positive");
  SpectrumBuildStats local;
  SpectrumBuildStats* st = stats ? stats : &local;
  *st = SpectrumBuildStats{};

  // Dedup the inputs, both exact and mutually inverse duplicates, so that
  // feeding a set twice (or one not yet inverse-identified) changes nothing.
  std::vector<Mat2> reps;
  {
    KeyStore store(matrix_tol);
    for (const CanonicalElement& e : elements) {
      Mat2 c = canonicalize(e.m, matrix_tol).m;
      if (store.find(c) != kNpos) continue;
      if (store.find(canonicalize(c.inverse(), matrix_tol).m) != kNpos)
        continue;
      store.insert(c, reps.size());
      reps.push_back(c);
    }
  }

  struct Item {
    double l, th;
    Mat2 m;
  };
  std::vector<Item> items;
  for (const Mat2& m : reps) {
    ElementClass cls = classify(m, matrix_tol);
    if (cls != ElementClass::Hyperbolic && cls != ElementClass::Loxodromic) {
      ++st->discarded_nonloxodromic;
      continue;
    }
    ComplexLength cl = complex_length(m, matrix_tol);
    if (cl.length > y) continue;
    items.push_back({cl.length, cl.holonomy, m});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.l != b.l) return a.l < b.l;
    return a.th < b.th;
  });

  // Bucket by (length, holonomy), anchored on the first member so tolerance
  // chains cannot creep.
  std::vector<Bucket> buckets;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool fresh = buckets.empty() ||
                 items[i].l - buckets.back().l > bucket_tol ||
                 circ_dist(items[i].th, buckets.back().th) > bucket_tol;
    if (fresh)
      buckets.push_back(Bucket{items[i].l, items[i].th, {i}});
    else
      buckets.back().members.push_back(i);
  }

  // Merge buckets that meet across the holonomy branch cut (theta ~ +-pi
  // sorts to opposite ends of an equal-length run).
  {
    std::vector<char> dead(buckets.size(), 0);
    for (std::size_t i = 0; i < buckets.size(); ++i) {
      if (dead[i]) continue;
      for (std::size_t j = i + 1; j < buckets.size(); ++j) {
        if (buckets[j].l - buckets[i].l > bucket_tol) break;
        if (dead[j]) continue;
        if (circ_dist(buckets[i].th, buckets[j].th) <= bucket_tol) {
          buckets[i].members.insert(buckets[i].members.end(),
                                    buckets[j].members.begin(),
                                    buckets[j].members.end());
          dead[j] = 1;
        }
      }
    }
    std::vector<Bucket> keep;
    keep.reserve(buckets.size());
    for (std::size_t i = 0; i < buckets.size(); ++i)
      if (!dead[i]) keep.push_back(std::move(buckets[i]));
    buckets.swap(keep);
  }

  // Conjugacy classes inside each bucket: elements are conjugated by the
  // supplied set (and inverses); pairs this search cannot join stay distinct
  // and are counted as undecided.
  std::vector<Mat2> conjugators;
  conjugators.reserve(2 * reps.size());
  for (const Mat2& m : reps) {
    conjugators.push_back(m);
    conjugators.push_back(m.inverse());
  }

  std::vector<std::size_t> item_bucket(items.size(), kNpos);
  std::vector<std::size_t> item_comp(items.size(), kNpos);
  for (std::size_t bi = 0; bi < buckets.size(); ++bi) {
    Bucket& b = buckets[bi];
    const std::size_t n = b.members.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find_root = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };

    if (n > 1) {
      // Member lookup keyed on each element and its inverse: a conjugate of
      // one class representative may equal another representative's inverse.
      KeyStore local(matrix_tol);
      for (std::size_t pos = 0; pos < n; ++pos) {
        const Mat2& m = items[b.members[pos]].m;
        local.insert(m, pos);
        Mat2 mi = canonicalize(m.inverse(), matrix_tol).m;
        if (local.find(mi) == kNpos) local.insert(mi, pos);
      }
      for (std::size_t pos = 0; pos < n; ++pos) {
        const Mat2& x = items[b.members[pos]].m;
        for (const Mat2& g : conjugators) {
          Mat2 conj = canonicalize(g * x * g.inverse(), matrix_tol).m;
          std::size_t hit = local.find(conj);
          if (hit == kNpos || hit == pos) continue;
          std::size_t ra = find_root(pos), rb = find_root(hit);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }

    b.comp_reps.clear();
    b.comp_of.assign(n, kNpos);
    std::vector<std::size_t> root_comp(n, kNpos);
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::size_t r = find_root(pos);
      if (root_comp[r] == kNpos) {
        root_comp[r] = b.comp_reps.size();
        b.comp_reps.push_back(b.members[pos]);
      }
      b.comp_of[pos] = root_comp[r];
      item_bucket[b.members[pos]] = bi;
      item_comp[b.members[pos]] = root_comp[r];
    }
    b.comps = static_cast<long>(b.comp_reps.size());
    if (b.comps > 1)
      st->undecided_pairs +=
          static_cast<std::size_t>(b.comps) * (b.comps - 1) / 2;
  }

  // Power structure.  Walk buckets in increasing length; whatever is not yet
  // claimed as a power is primitive, and its matrix powers claim the buckets
  // they land in.  An exact hit is a canonical-key match of the powered
  // matrix (or its inverse); the coordinate fallback only fires when the key
  // lookup misses and is counted as weak.
  KeyStore global(matrix_tol);
  for (std::size_t i = 0; i < items.size(); ++i) {
    global.insert(items[i].m, i);
    Mat2 mi = canonicalize(items[i].m.inverse(), matrix_tol).m;
    if (global.find(mi) == kNpos) global.insert(mi, i);
  }

  constexpr int kPowerCap = 1000000;
  for (std::size_t bi = 0; bi < buckets.size(); ++bi) {
    if (buckets[bi].claim_k != 0) continue;  // already known to be a power
    for (std::size_t rep_item : buckets[bi].comp_reps) {
      const Mat2 base = items[rep_item].m;
      const double l0 = items[rep_item].l;
      const double th0 = items[rep_item].th;
      Mat2 pw = base;
      for (int k = 2;; ++k) {
        if (k > kPowerCap)
          throw InvariantViolation("power index exceeds sanity cap");
        if (k * l0 > y + bucket_tol) break;
        pw = canonicalize(pw * base, matrix_tol).m;
        std::size_t hit_item = global.find(pw);
        std::size_t tb = kNpos;
        bool weak = false;
        if (hit_item != kNpos) {
          tb = item_bucket[hit_item];
        } else {
          tb = find_bucket_by_coords(buckets, k * l0, wrap_angle(k * th0),
                                     bucket_tol);
          weak = tb != kNpos;
        }
        if (tb == kNpos || tb == bi) continue;
        Bucket& t = buckets[tb];
        if (weak) ++st->weak_power_matches;
        if (t.claim_k == 0) {
          t.claim_k = k;
          t.claim_root = buckets[bi].l;
        } else if (t.claim_k != k ||
                   std::abs(t.claim_root - buckets[bi].l) > 1e-9) {
          t.conflict = true;
        }
        if (!weak) t.hit_comps.push_back(item_comp[hit_item]);
      }
    }
  }

  for (Bucket& b : buckets) {
    if (b.claim_k == 0) continue;
    std::sort(b.hit_comps.begin(), b.hit_comps.end());
    b.hit_comps.erase(std::unique(b.hit_comps.begin(), b.hit_comps.end()),
                      b.hit_comps.end());
    if (b.conflict || static_cast<long>(b.hit_comps.size()) < b.comps)
      ++st->mixed_buckets;  // row cannot represent all of its classes
  }

  SpectrumTable table;
  table.horizon = y;
  table.complete = assert_complete || elements.empty();
  table.classes.reserve(buckets.size());
  for (const Bucket& b : buckets) {
    GeodesicClass c;
    c.length = b.l;
    c.holonomy = b.th;
    c.multiplicity = b.comps;
    if (b.claim_k == 0) {
      c.primitive = true;
      c.power_index = 1;
      c.root_length = b.l;
    } else {
      c.primitive = false;
      c.power_index = b.claim_k;
      c.root_length = b.claim_root;
    }
    table.classes.push_back(c);
  }
  table.systole = table.classes.empty() ? y : table.classes.front().length;
  validate_table(table, bucket_tol);
  return table;
}

void validate_table(const SpectrumTable& table, double merge_tol) {
  constexpr double kPi = std::numbers::pi;
  auto bad = [](const char* msg) {
    throw InvariantViolation(std::string("spectrum table: ") + msg);
  };
  if (!std::isfinite(table.systole) || !std::isfinite(table.horizon))
    bad("non-finite systole or horizon");
  if (table.horizon < 0.0) bad("negative horizon");
  const auto& cs = table.classes;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const GeodesicClass& c = cs[i];
    if (!std::isfinite(c.length) || c.length <= 0.0)
      bad("non-positive length");
    if (!std::isfinite(c.holonomy) || c.holonomy <= -kPi - 1e-12 ||
        c.holonomy > kPi + 1e-12)
      bad("holonomy off the (-pi, pi] branch");
    if (c.multiplicity < 1) bad("multiplicity below one");
    if (c.power_index < 1) bad("power index below one");
    if (!(c.root_length > 0.0)) bad("non-positive root length");
    if (std::abs(c.length - c.power_index * c.root_length) > 1e-8)
      bad("length does not match power_index * root_length");
    if (c.primitive != (c.power_index == 1))
      bad("primitive flag contradicts power index");
    if (i > 0) {
      const GeodesicClass& p = cs[i - 1];
      if (c.length < p.length - 1e-12) bad("rows not sorted by length");
      if (c.length == p.length && c.holonomy <= p.holonomy)
        bad("rows not sorted by holonomy");
    }
    for (std::size_t j = i + 1;
         j < cs.size() && cs[j].length - c.length <= merge_tol; ++j) {
      if (circ_dist(cs[j].holonomy, c.holonomy) <= merge_tol)
        bad("two rows within merge tolerance");
    }
  }
  if (!cs.empty() && table.systole > cs.front().length + 1e-9)
    bad("systole above the minimum length");
}

}  // namespace holospec
