#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phiconv/saddle.hpp"
#include "phiconv/support.hpp"

namespace phiconv {

// Parsed problem file: dimension, grid box, named functions (expressions or
// inline tables, sampled at load), an optional saddle block, and free-form
// parameters (alpha, gamma, eta, epsilon, lambda, dictionary spec).
struct Problem {
  int dimension = 1;
  Vector low = Vector::zero(1);
  Vector high = Vector::zero(1);
  double step = 1.0;
  std::map<std::string, SampledFunction> functions;

  struct SaddleSpec {
    std::vector<std::string> labels;
    std::vector<std::string> function_names;
    double mixture_step = 0.01;
  };
  std::optional<SaddleSpec> saddle;

  struct Params {
    std::optional<double> alpha, gamma, eta, epsilon, lambda;
    std::optional<std::vector<double>> dict_curvatures;
    std::optional<double> dict_slope_step;
  } params;

  const SampledFunction& fn(const std::string& name) const;
  SaddleProblem saddle_problem() const;
  MinorantDictionary dictionary_for(const SampledFunction& f) const;
};

Problem load_problem(const std::string& path);
Problem parse_problem(const std::string& json_text);

// Minorant flag syntax "a,l1[,l2,...],c" (dimension = #fields - 2).
QuadMinorant parse_minorant(const std::string& flag);

// Vector flag syntax "v1[,v2,...]".
Vector parse_vector(const std::string& flag);

}  // namespace phiconv
