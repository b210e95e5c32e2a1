#include "vknot/diagram.hpp"

#include <cctype>
#include <limits>

#include "vknot/errors.hpp"

namespace vknot {

std::size_t Diagram::passage_count() const {
  std::size_t total = 0;
  for (const auto& comp : components) total += comp.size();
  return total;
}

int Diagram::crossing_count() const {
  return static_cast<int>(passage_count() / 2);
}

int Diagram::max_crossing_id() const {
  int best = 0;
  for (const auto& comp : components)
    for (const auto& p : comp)
      if (p.crossing > best) best = p.crossing;
  return best;
}

void validate(const Diagram& d) {
  std::map<int, std::vector<Passage>> by_id;
  for (const auto& comp : d.components) {
    for (const auto& p : comp) {
      if (p.crossing <= 0)
        fail("validation_error", "crossing ids must be positive, got " +
                                     std::to_string(p.crossing));
      if (p.sign != 1 && p.sign != -1)
        fail("validation_error", "crossing " + std::to_string(p.crossing) +
                                     " has sign " + std::to_string(p.sign));
      by_id[p.crossing].push_back(p);
    }
  }
  for (const auto& [id, passages] : by_id) {
    if (passages.size() != 2)
      fail("validation_error", "crossing " + std::to_string(id) + " occurs " +
                                   std::to_string(passages.size()) +
                                   " times, expected 2");
    if (passages[0].role == passages[1].role)
      fail("validation_error", "crossing " + std::to_string(id) +
                                   " is missing an " +
                                   (passages[0].role == Role::Over ? "Under"
                                                                   : "Over") +
                                   " passage");
    if (passages[0].sign != passages[1].sign)
      fail("validation_error",
           "crossing " + std::to_string(id) + " sign mismatch");
  }
}

std::map<int, CrossingSite> crossing_index(const Diagram& d) {
  std::map<int, CrossingSite> index;
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.components[c];
    for (int p = 0; p < static_cast<int>(comp.size()); ++p) {
      const Passage& pass = comp[p];
      CrossingSite& site = index[pass.crossing];
      site.sign = pass.sign;
      if (pass.role == Role::Over)
        site.over = {c, p};
      else
        site.under = {c, p};
    }
  }
  return index;
}

Diagram parse(const std::string& text) {
  Diagram d;
  d.components.emplace_back();
  std::size_t i = 0;
  auto syntax = [&](const std::string& what) {
    fail("syntax_error",
         "syntax error at offset " + std::to_string(i) + ": " + what);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  for (;;) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    if (c == '|') {
      d.components.emplace_back();
      ++i;
      continue;
    }
    Role role;
    if (c == 'O')
      role = Role::Over;
    else if (c == 'U')
      role = Role::Under;
    else
      syntax(std::string("expected 'O', 'U' or '|', got '") + c + "'");
    ++i;
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      syntax("expected a crossing number");
    long long id = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      id = id * 10 + (text[i] - '0');
      if (id > std::numeric_limits<int>::max()) syntax("crossing number too large");
      ++i;
    }
    if (id == 0) syntax("crossing numbers are positive");
    skip_ws();
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      syntax("expected '+' or '-'");
    int sign = text[i] == '+' ? +1 : -1;
    ++i;
    d.components.back().push_back({static_cast<int>(id), role, sign});
  }
  validate(d);
  return d;
}

std::string serialize(const Diagram& d) {
  std::map<int, int> renumber;
  int next = 1;
  std::string out;
  bool first_component = true;
  for (const auto& comp : d.components) {
    if (!first_component) out += '|';
    first_component = false;
    for (const auto& p : comp) {
      auto [it, inserted] = renumber.try_emplace(p.crossing, next);
      if (inserted) ++next;
      out += p.role == Role::Over ? 'O' : 'U';
      out += std::to_string(it->second);
      out += p.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

std::vector<ArcRef> arcs(const Diagram& d) {
  std::vector<ArcRef> out;
  for (int c = 0; c < d.component_count(); ++c) {
    int k = static_cast<int>(d.components[c].size());
    for (int p = 0; p < std::max(k, 1); ++p) out.push_back({c, p});
  }
  return out;
}

bool arc_valid(const Diagram& d, ArcRef a) {
  if (a.component < 0 || a.component >= d.component_count()) return false;
  int k = static_cast<int>(d.components[a.component].size());
  return a.position >= 0 && a.position < std::max(k, 1);
}

FlatDiagram flatten(const Diagram& d) {
  FlatDiagram f;
  f.components.reserve(d.components.size());
  for (const auto& comp : d.components) {
    std::vector<FlatPassage> flat;
    flat.reserve(comp.size());
    for (const auto& p : comp)
      flat.push_back({p.crossing, label_delta(p) == -1
                                      ? Chirality::LeftIncoming
                                      : Chirality::RightIncoming});
    f.components.push_back(std::move(flat));
  }
  return f;
}

}  // namespace vknot
