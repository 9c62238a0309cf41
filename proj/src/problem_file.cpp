#include "phiconv/problem_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "phiconv/expression.hpp"

namespace phiconv {

namespace {

using json = nlohmann::ordered_json;

Vector vector_from_json(const json& j, int dim, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw InputError("problem file: " + what + " must be an array of length " + std::to_string(dim));
  std::vector<double> v;
  for (const auto& e : j) v.push_back(e.get<double>());
  return Vector(std::span<const double>(v.data(), v.size()));
}

}  // namespace

const SampledFunction& Problem::fn(const std::string& name) const {
  auto it = functions.find(name);
  if (it == functions.end()) throw InputError("problem file: unknown function '" + name + "'");
  return it->second;
}

SaddleProblem Problem::saddle_problem() const {
  if (!saddle) throw InputError("problem file: no saddle block");
  std::vector<SampledFunction> tables;
  for (const auto& name : saddle->function_names) tables.push_back(fn(name));
  return SaddleProblem(saddle->labels, std::move(tables), saddle->mixture_step);
}

MinorantDictionary Problem::dictionary_for(const SampledFunction& f) const {
  double step = params.dict_slope_step.value_or(0.25);
  MinorantDictionary d = MinorantDictionary::default_for(f, step);
  if (params.dict_curvatures) return MinorantDictionary(*params.dict_curvatures, d.slopes());
  return d;
}

Problem parse_problem(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw InputError(std::string("problem file: JSON parse error: ") + e.what());
  }

  Problem p;
  p.dimension = j.at("dimension").get<int>();
  if (p.dimension < 1 || p.dimension > kMaxDim) throw InputError("problem file: dimension out of range");
  const json& box = j.at("box");
  p.low = vector_from_json(box.at("low"), p.dimension, "box.low");
  p.high = vector_from_json(box.at("high"), p.dimension, "box.high");
  p.step = box.at("step").get<double>();

  if (!j.contains("functions") || !j.at("functions").is_object())
    throw InputError("problem file: missing functions object");
  for (const auto& [name, spec] : j.at("functions").items()) {
    if (spec.contains("expr")) {
      Expression e = Expression::parse(spec.at("expr").get<std::string>(), p.dimension);
      p.functions.emplace(name, SampledFunction::sample(p.low, p.high, p.step,
                                                        [&e](const Vector& x) { return e.eval(x); }));
    } else if (spec.contains("table")) {
      const json& tb = spec.at("table");
      std::vector<ExtReal> vals;
      vals.reserve(tb.size());
      for (const auto& e : tb) {
        if (e.is_null())
          vals.push_back(ExtReal::infinity());
        else
          vals.push_back(ExtReal(e.get<double>()));
      }
      p.functions.emplace(name, SampledFunction(p.low, p.high, p.step, std::move(vals)));
    } else {
      throw InputError("problem file: function '" + name + "' needs 'expr' or 'table'");
    }
  }

  if (j.contains("saddle")) {
    const json& s = j.at("saddle");
    Problem::SaddleSpec spec;
    for (const auto& l : s.at("labels")) spec.labels.push_back(l.get<std::string>());
    for (const auto& f : s.at("functions")) spec.function_names.push_back(f.get<std::string>());
    // Default simplex resolution: 0.01 for two labels, 0.05 beyond.
    spec.mixture_step = spec.labels.size() <= 2 ? 0.01 : 0.05;
    if (s.contains("mixture_step")) spec.mixture_step = s.at("mixture_step").get<double>();
    if (spec.labels.size() != spec.function_names.size())
      throw InputError("problem file: saddle labels/functions size mismatch");
    p.saddle = std::move(spec);
  }

  if (j.contains("parameters")) {
    const json& q = j.at("parameters");
    auto opt = [&](const char* key) -> std::optional<double> {
      if (q.contains(key)) return q.at(key).get<double>();
      return std::nullopt;
    };
    p.params.alpha = opt("alpha");
    p.params.gamma = opt("gamma");
    p.params.eta = opt("eta");
    p.params.epsilon = opt("epsilon");
    p.params.lambda = opt("lambda");
    if (q.contains("dictionary")) {
      const json& d = q.at("dictionary");
      if (d.contains("curvatures")) {
        std::vector<double> c;
        for (const auto& e : d.at("curvatures")) c.push_back(e.get<double>());
        p.params.dict_curvatures = std::move(c);
      }
      if (d.contains("slope_step")) p.params.dict_slope_step = d.at("slope_step").get<double>();
    }
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("problem file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

QuadMinorant parse_minorant(const std::string& flag) {
  std::vector<double> fields;
  std::stringstream ss(flag);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      fields.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw InputError("minorant flag: bad number '" + tok + "' in '" + flag + "'");
    }
  }
  if (fields.size() < 3) throw InputError("minorant flag: need a,l1[,l2,...],c in '" + flag + "'");
  double a = fields.front(), c = fields.back();
  std::vector<double> l(fields.begin() + 1, fields.end() - 1);
  return QuadMinorant(a, Vector(std::span<const double>(l.data(), l.size())), c);
}

Vector parse_vector(const std::string& flag) {
  std::vector<double> fields;
  std::stringstream ss(flag);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      fields.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw InputError("vector flag: bad number '" + tok + "' in '" + flag + "'");
    }
  }
  if (fields.empty()) throw InputError("vector flag: empty");
  return Vector(std::span<const double>(fields.data(), fields.size()));
}

}  // namespace phiconv
