#include "binform/forms.hpp"

#include <fstream>
#include "json.hpp"
#include <sstream>
#include <stdexcept>

namespace binform {

PolyForm generic_form(int d) {
  if (d < 1) throw std::invalid_argument("generic_form: degree must be >= 1");
  const auto arity = static_cast<std::size_t>(d) + 1;
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) coeffs.push_back(MultiPoly::variable(arity, i));
  return PolyForm(std::move(coeffs));
}

RatForm unstable_form(int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("unstable_form: k must be even and >= 2");
  RatForm f(2 * k, Rat(0));
  f[k + 1] = 1;
  return f;
}

RatForm specialize(const PolyForm& form, std::span<const Rat> point) {
  std::vector<Rat> coeffs;
  coeffs.reserve(form.coeffs().size());
  for (const auto& c : form.coeffs()) coeffs.push_back(poly_eval(c, point));
  return RatForm(std::move(coeffs));
}

PolyForm lift(const RatForm& form, std::size_t arity) {
  std::vector<MultiPoly> coeffs;
  for (const auto& c : form.coeffs()) coeffs.push_back(MultiPoly::constant(arity, c));
  return PolyForm(std::move(coeffs));
}

UniModular::UniModular(Rat g11, Rat g12, Rat g21, Rat g22)
    : m_{std::move(g11), std::move(g12), std::move(g21), std::move(g22)} {
  if (m_[0] * m_[3] - m_[1] * m_[2] != 1)
    throw std::domain_error("UniModular: determinant is not 1");
}

UniModular UniModular::inverse() const { return {g22(), -g12(), -g21(), g11()}; }

UniModular operator*(const UniModular& a, const UniModular& b) {
  return {a.g11() * b.g11() + a.g12() * b.g21(), a.g11() * b.g12() + a.g12() * b.g22(),
          a.g21() * b.g11() + a.g22() * b.g21(), a.g21() * b.g12() + a.g22() * b.g22()};
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Sampler::integer: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

UniModular Sampler::sl2() {
  const UniModular lower(1, 0, Rat(integer(-9, 9)), 1);
  const UniModular upper(1, Rat(integer(-9, 9)), 0, 1);
  return lower * upper;
}

RatForm Sampler::integer_form(int d, std::int64_t lo, std::int64_t hi) {
  RatForm f(d, Rat(0));
  for (int i = 0; i <= d; ++i) f[i] = Rat(integer(lo, hi));
  return f;
}

RatForm form_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("form file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("coeffs"))
    throw std::invalid_argument("form file: expected {\"d\": int, \"coeffs\": [...]}");
  if (!j["d"].is_number_integer()) throw std::invalid_argument("form file: \"d\" must be an integer");
  const int d = j["d"].get<int>();
  const auto& cs = j["coeffs"];
  if (d < 0 || !cs.is_array() || cs.size() != static_cast<std::size_t>(d) + 1)
    throw std::invalid_argument("form file: \"coeffs\" must hold d+1 entries");
  std::vector<Rat> coeffs;
  for (const auto& c : cs) {
    if (c.is_string()) coeffs.push_back(parse_rat(c.get<std::string>()));
    else if (c.is_number_integer()) coeffs.push_back(Rat(Int(c.dump(), 10)));
    else throw std::invalid_argument("form file: coefficients must be rational strings");
  }
  return RatForm(std::move(coeffs));
}

std::string form_to_json(const RatForm& form) {
  nlohmann::json j;
  j["d"] = form.order();
  j["coeffs"] = nlohmann::json::array();
  for (const auto& c : form.coeffs()) j["coeffs"].push_back(to_string(c));
  return j.dump();
}

RatForm read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open form file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return form_from_json(buf.str());
}

}  // namespace binform
