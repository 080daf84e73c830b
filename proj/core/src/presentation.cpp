#include "wiremono/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace wiremono {

std::string relation_name_str(RelationName name) {
  switch (name) {
    case RelationName::M1: return "M1";
    case RelationName::M2: return "M2";
    case RelationName::M3: return "M3";
    case RelationName::C: return "C";
    case RelationName::TL1: return "TL1";
    case RelationName::TL2: return "TL2";
    case RelationName::TL3a: return "TL3a";
    case RelationName::TL3b: return "TL3b";
    case RelationName::Mix1a: return "Mix1a";
    case RelationName::Mix1b: return "Mix1b";
    case RelationName::Mix2: return "Mix2";
    case RelationName::Mix3a: return "Mix3a";
    case RelationName::Mix3b: return "Mix3b";
    case RelationName::Inv: return "Inv";
  }
  throw std::logic_error("unreachable");
}

std::string RelationInstance::label() const {
  std::ostringstream os;
  os << relation_name_str(name);
  if (i > 0 && j > 0) {
    os << '(' << i << ',' << j << ')';
  } else if (i > 0) {
    os << '(' << i << ')';
  }
  return os.str();
}

std::string RelationInstance::str() const {
  std::ostringstream os;
  os << label() << ": ";
  auto side = [&os](const std::vector<GeneratorSymbol>& w) {
    if (w.empty()) {
      os << '1';
      return;
    }
    for (size_t k = 0; k < w.size(); ++k) {
      if (k) os << ' ';
      os << w[k].str();
    }
  };
  side(lhs);
  os << " = ";
  side(rhs);
  return os.str();
}

std::vector<RelationInstance> relation_suite(int n, bool include_d) {
  if (n < 2) throw std::invalid_argument("relation suite needs rank at least 2");
  std::vector<RelationInstance> out;
  const auto t = [](int i) { return GeneratorSymbol::t(i); };
  const auto h = [](int i) { return GeneratorSymbol::h(i); };
  const auto c = GeneratorSymbol::c();
  const auto d = GeneratorSymbol::d();

  auto add = [&out](RelationName name, int i, int j, std::vector<GeneratorSymbol> lhs,
                    std::vector<GeneratorSymbol> rhs) {
    out.push_back(RelationInstance{name, i, j, std::move(lhs), std::move(rhs)});
  };

  for (int i = 1; i < n; ++i) {
    add(RelationName::M1, i, 0, {t(i), t(i)}, {});
    add(RelationName::C, i, 0, {c, t(i)}, {t(i), c});
    add(RelationName::TL3a, i, 0, {h(i), h(i)}, {c, h(i)});
    add(RelationName::TL3b, i, 0, {h(i), h(i)}, {h(i), c});
    add(RelationName::Mix1a, i, 0, {h(i), t(i)}, {h(i)});
    add(RelationName::Mix1b, i, 0, {t(i), h(i)}, {h(i)});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      add(RelationName::M2, i, j, {t(i), t(j)}, {t(j), t(i)});
      add(RelationName::TL1, i, j, {h(i), h(j)}, {h(j), h(i)});
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (i == j) continue;
      if (j == i + 1 || j == i - 1) {
        add(RelationName::M3, i, j, {t(i), t(j), t(i)}, {t(j), t(i), t(j)});
        add(RelationName::TL2, i, j, {h(i), h(j), h(i)}, {h(i)});
        add(RelationName::Mix3a, i, j, {t(i), h(j), h(i)}, {t(j), h(i)});
        add(RelationName::Mix3b, i, j, {h(i), h(j), t(i)}, {h(i), t(j)});
      } else if (i < j) {
        add(RelationName::Mix2, i, j, {h(i), t(j)}, {t(j), h(i)});
        add(RelationName::Mix2, j, i, {h(j), t(i)}, {t(i), h(j)});
      }
    }
  }
  if (include_d) {
    add(RelationName::Inv, 0, 0, {c, d}, {});
    add(RelationName::Inv, 0, 0, {d, c}, {});
  }
  return out;
}

TwistedElement evaluate_relation_side(MonoidKind kind, const std::vector<GeneratorSymbol>& side) {
  if (side.empty()) return TwistedElement::identity(kind);
  return evaluate_generator_word(kind, side);
}

RelationReport verify_relations(MonoidKind kind) {
  if (kind.n < 2) throw std::invalid_argument("relation verification needs rank at least 2");
  RelationReport report;
  const auto suite = relation_suite(kind.n, kind.signed_twist());
  for (const auto& rel : suite) {
    TwistedElement lhs = evaluate_relation_side(kind, rel.lhs);
    TwistedElement rhs = evaluate_relation_side(kind, rel.rhs);
    ++report.checked;
    if (!(lhs == rhs)) {
      report.first_failure = RelationFailure{rel, std::move(lhs), std::move(rhs)};
      return report;
    }
  }
  if (kind.signed_twist()) {
    // cd = dc = 1 together with (C) and (TL3) force d to commute with
    // every generator; check that directly as well.
    const TwistedElement d = TwistedElement::generator(kind, GeneratorSymbol::d());
    std::vector<GeneratorSymbol> gens;
    for (int i = 1; i < kind.n; ++i) {
      gens.push_back(GeneratorSymbol::t(i));
      gens.push_back(GeneratorSymbol::h(i));
    }
    gens.push_back(GeneratorSymbol::c());
    for (const auto& g : gens) {
      const TwistedElement img = TwistedElement::generator(kind, g);
      TwistedElement lhs = multiply(d, img);
      TwistedElement rhs = multiply(img, d);
      ++report.checked;
      if (!(lhs == rhs)) {
        RelationInstance inst{RelationName::Inv, 0, 0, {GeneratorSymbol::d(), g}, {g, GeneratorSymbol::d()}};
        report.first_failure = RelationFailure{std::move(inst), std::move(lhs), std::move(rhs)};
        return report;
      }
    }
  }
  return report;
}

}  // namespace wiremono
