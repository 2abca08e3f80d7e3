#include "kerovkit/json_io.hpp"

namespace kerovkit {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const SigmaSymbol& s) { return s.ks(); }

Json to_json(const SigmaCombo& c)
{
  Json terms = Json::array();
  for (const auto& [s, coefficient] : c.terms())
    terms.push_back({{"symbol", to_json(s)}, {"coefficient", to_json(coefficient)}});
  return {{"terms", terms}, {"text", to_string(c)}};
}

Json to_json(const FormalSum& f)
{
  Json terms = Json::array();
  for (const auto& [p, coefficient] : f.terms())
    terms.push_back({{"partition", to_string(p)}, {"coefficient", to_string(coefficient)}});
  return {{"n", f.size()}, {"terms", terms}};
}

Json to_json(const RPolynomial& p)
{
  Json terms = Json::array();
  for (const auto& [m, coefficient] : p.terms())
    terms.push_back({{"monomial", m}, {"coefficient", to_json(coefficient)}});
  return {{"terms", terms}, {"text", to_string(p)}};
}

Json to_json(const PairPartition& p)
{
  Json pairs = Json::array();
  for (const auto& [a, b] : p.pairs()) pairs.push_back({a, b});
  return {{"points", p.points()}, {"pairs", pairs}};
}

Json to_json(const AtomicMeasure& mu)
{
  Json atoms = Json::array();
  for (const auto& [x, w] : mu.atoms) atoms.push_back({{"location", to_json(x)}, {"weight", to_json(w)}});
  return {{"atoms", atoms}};
}

Json to_json(const Census& c)
{
  Json classes = Json::array();
  for (const auto& e : c.classes)
    classes.push_back({{"reduced", to_json(e.reduced)}, {"free_index", to_string(e.free_index)}, {"sources", e.sources}});
  return {{"genus", c.genus}, {"nmax", c.n_max}, {"classes", classes}, {"mirror_classes", c.mirror_classes}};
}

Json to_json(const WindingCycles& cycles)
{
  Json out = Json::array();
  for (const auto& c : cycles) out.push_back({{"cycle", c.vertices}, {"winds", c.winds}, {"k", c.k}});
  return out;
}

Json envelope(const std::string& command, Json result)
{
  return {{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
}

}  // namespace kerovkit
