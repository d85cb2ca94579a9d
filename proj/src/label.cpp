#include "partsep/label.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "partsep/errors.hpp"

namespace partsep {

Label::Label(std::vector<Partition> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("label: empty");
  for (const auto& p : parts_)
    if (p.n() != parts_.front().n()) throw ValidationError("label: partitions over different n");
  std::sort(parts_.begin(), parts_.end());
  parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
}

Label Label::parse(std::string_view text, int n) {
  std::vector<Partition> parts;
  std::string cur;
  auto flush = [&] {
    auto first = cur.find_first_not_of(" \t");
    if (first != std::string::npos) parts.push_back(Partition::parse(cur, n));
    cur.clear();
  };
  for (char c : text) {
    if (c == '{' || c == '}') continue;
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  if (n == 0 && !parts.empty()) {
    // Re-parse so every member agrees on the widest n seen.
    int nmax = 0;
    for (const auto& p : parts) nmax = std::max(nmax, p.n());
    if (std::any_of(parts.begin(), parts.end(), [&](const Partition& p) { return p.n() != nmax; }))
      return parse(text, nmax);
  }
  return Label(std::move(parts));
}

std::string Label::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ", ";
    s += parts_[i].str();
  }
  return s + "}";
}

ProperLabel::ProperLabel(Label l) : Label(std::move(l)) {
  if (!is_proper(*this)) throw ValidationError("label " + str() + " is not proper");
}

bool label_leq(const Label& beta, const Label& alpha) {
  if (beta.n() != alpha.n()) throw ArgumentError("label_leq: labels over different n");
  return std::all_of(beta.begin(), beta.end(), [&](const Partition& b) {
    return std::any_of(alpha.begin(), alpha.end(), [&](const Partition& a) { return refines(b, a); });
  });
}

bool is_proper(const Label& label) {
  const auto& ps = label.partitions();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (i != j && refines(ps[i], ps[j])) return false;
  return true;
}

ProperLabel properize(const Label& label) {
  std::vector<Partition> keep;
  for (const auto& b : label) {
    bool dominated = std::any_of(label.begin(), label.end(), [&](const Partition& a) { return a != b && refines(b, a); });
    if (!dominated) keep.push_back(b);
  }
  return ProperLabel(Label(std::move(keep)));
}

std::uint64_t for_each_antichain(const std::vector<std::vector<bool>>& comparable,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  const int N = static_cast<int>(comparable.size());
  std::uint64_t count = 0;
  bool stop = false;
  std::vector<int> tuple;
  // Extension candidates: larger index, incomparable to everything in the tuple.
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cand) {
    for (std::size_t k = 0; k < cand.size() && !stop; ++k) {
      int c = cand[k];
      tuple.push_back(c);
      ++count;
      if (!visit(tuple)) {
        stop = true;
      } else {
        std::vector<int> next;
        for (std::size_t j = k + 1; j < cand.size(); ++j)
          if (!comparable[static_cast<std::size_t>(c)][static_cast<std::size_t>(cand[j])]) next.push_back(cand[j]);
        if (!next.empty()) rec(next);
      }
      tuple.pop_back();
    }
  };
  std::vector<int> all(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) all[static_cast<std::size_t>(i)] = i;
  rec(all);
  return count;
}

namespace {

std::vector<std::vector<bool>> refinement_comparability(const std::vector<Partition>& parts) {
  const std::size_t N = parts.size();
  std::vector<std::vector<bool>> cmp(N, std::vector<bool>(N, false));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) cmp[i][j] = refines(parts[i], parts[j]) || refines(parts[j], parts[i]);
  return cmp;
}

}  // namespace

std::uint64_t for_each_proper_label(int n, const std::function<bool(const ProperLabel&)>& visit) {
  if (n < 1 || n > 6) throw BoundsError("enumerate_proper_labels: n=" + std::to_string(n) + " outside 1..6");
  const auto parts = all_partitions(n);
  return for_each_antichain(refinement_comparability(parts), [&](const std::vector<int>& t) {
    std::vector<Partition> members;
    for (int i : t) members.push_back(parts[static_cast<std::size_t>(i)]);
    return visit(ProperLabel(Label(std::move(members))));
  });
}

std::vector<ProperLabel> enumerate_proper_labels(int n, std::uint64_t cap) {
  std::vector<ProperLabel> out;
  bool over = false;
  for_each_proper_label(n, [&](const ProperLabel& l) {
    if (out.size() >= cap) {
      over = true;
      return false;
    }
    out.push_back(l);
    return true;
  });
  if (over)
    throw LimitError("enumerate_proper_labels: more than " + std::to_string(cap) + " proper labels for n=" + std::to_string(n));
  // Depth-first output regrouped by tuple length gives the level-by-level order.
  std::stable_sort(out.begin(), out.end(), [](const ProperLabel& a, const ProperLabel& b) { return a.size() < b.size(); });
  return out;
}

bool class_empty_by_construction(const ClassLabel& cl) {
  for (const auto& b : cl.included)
    for (const auto& a : cl.excluded)
      if (label_leq(b, a)) return true;
  return false;
}

std::string LabelPoset::node_name(int i) const {
  if (i == w_index()) return "W";
  return labels[static_cast<std::size_t>(i)].str();
}

std::vector<std::pair<int, int>> LabelPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int N = size();
  auto L = [&](int i, int j) { return static_cast<bool>(leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]); };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j || !L(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < N && direct; ++k)
        if (k != i && k != j && L(i, k) && L(k, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

LabelPoset label_poset(int n, bool with_w, std::uint64_t cap) {
  if (with_w && n != 3) throw ArgumentError("label_poset: the W node exists only for n=3");
  LabelPoset P;
  P.n = n;
  P.with_w = with_w;
  P.labels = enumerate_proper_labels(n, cap);
  const std::size_t L = P.labels.size();
  const std::size_t N = static_cast<std::size_t>(P.size());
  P.leq.assign(N, std::vector<bool>(N, false));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) P.leq[i][j] = label_leq(P.labels[i], P.labels[j]);
  if (with_w) {
    // W sits above every bipartition union and below only the trivial label.
    const auto top = ProperLabel{Partition::trivial(n)};
    for (std::size_t i = 0; i < L; ++i) {
      bool is_top = P.labels[i] == top;
      P.leq[i][L] = !is_top;
      P.leq[L][i] = is_top;
    }
    P.leq[L][L] = true;
  }
  return P;
}

std::vector<NodeClass> enumerate_node_classes(const LabelPoset& poset, std::uint64_t cap) {
  if (poset.n < 1 || poset.n > 4) throw BoundsError("enumerate_ps_classes: n=" + std::to_string(poset.n) + " outside 1..4");
  const int N = poset.size();
  std::vector<std::vector<bool>> cmp(static_cast<std::size_t>(N), std::vector<bool>(static_cast<std::size_t>(N)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      cmp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          poset.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ||
          poset.leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  // A class survives the construction test iff its included set is a
  // non-empty up-set; each such set is the up-closure of its minimal antichain.
  std::vector<NodeClass> out;
  bool over = false;
  for_each_antichain(cmp, [&](const std::vector<int>& mins) {
    if (out.size() >= cap) {
      over = true;
      return false;
    }
    NodeClass c;
    for (int j = 0; j < N; ++j) {
      bool up = std::any_of(mins.begin(), mins.end(), [&](int m) {
        return static_cast<bool>(poset.leq[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]);
      });
      (up ? c.included : c.excluded).push_back(j);
    }
    out.push_back(std::move(c));
    return true;
  });
  if (over) throw LimitError("enumerate_ps_classes: more than " + std::to_string(cap) + " classes for n=" + std::to_string(poset.n));
  // Larger included set = coarser class; list from the separable end upward.
  std::stable_sort(out.begin(), out.end(), [](const NodeClass& a, const NodeClass& b) { return a.included.size() > b.included.size(); });
  return out;
}

std::vector<ClassLabel> enumerate_ps_classes(int n, std::uint64_t cap) {
  if (n < 1 || n > 4) throw BoundsError("enumerate_ps_classes: n=" + std::to_string(n) + " outside 1..4");
  const auto P = label_poset(n, false, cap);
  std::vector<ClassLabel> out;
  for (const auto& nc : enumerate_node_classes(P, cap)) {
    ClassLabel cl;
    for (int i : nc.included) cl.included.push_back(P.labels[static_cast<std::size_t>(i)]);
    for (int i : nc.excluded) cl.excluded.push_back(P.labels[static_cast<std::size_t>(i)]);
    out.push_back(std::move(cl));
  }
  return out;
}

std::string lattice_json(const LabelPoset& poset, bool with_classes, std::uint64_t cap) {
  nlohmann::ordered_json j;
  j["n"] = poset.n;
  j["w_extension"] = poset.with_w;
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  for (int i = 0; i < poset.size(); ++i) nodes.push_back(poset.node_name(i));
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : poset.covers()) edges.push_back({poset.node_name(a), poset.node_name(b)});
  if (with_classes) {
    auto& cls = j["classes"] = nlohmann::ordered_json::array();
    for (const auto& c : enumerate_node_classes(poset, cap)) {
      nlohmann::ordered_json e;
      e["included"] = nlohmann::ordered_json::array();
      e["excluded"] = nlohmann::ordered_json::array();
      for (int i : c.included) e["included"].push_back(poset.node_name(i));
      for (int i : c.excluded) e["excluded"].push_back(poset.node_name(i));
      cls.push_back(std::move(e));
    }
    j["class_count"] = cls.size();
  }
  return j.dump(2);
}

std::string lattice_dot(const LabelPoset& poset) {
  std::ostringstream os;
  os << "digraph labels {\n  rankdir=BT;\n";
  for (int i = 0; i < poset.size(); ++i) os << "  n" << i << " [label=\"" << poset.node_name(i) << "\"];\n";
  for (auto [a, b] : poset.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_text(const LabelPoset& poset, bool with_classes, std::uint64_t cap) {
  std::ostringstream os;
  os << "n=" << poset.n << "  proper labels: " << poset.labels.size();
  if (poset.with_w) os << " (+W)";
  os << "\n";
  for (int i = 0; i < poset.size(); ++i) os << "  " << poset.node_name(i) << "\n";
  if (with_classes) {
    const auto cls = enumerate_node_classes(poset, cap);
    os << "classes: " << cls.size() << "\n";
    for (const auto& c : cls) {
      os << "  in:";
      for (int i : c.included) os << ' ' << poset.node_name(i);
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace partsep
