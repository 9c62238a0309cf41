#include "phiconv/report.hpp"

#include <cstdio>

namespace phiconv {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Report to_report(const Vector& v) {
  Report r = Report::array();
  for (int i = 0; i < v.dim(); ++i) r.push_back(v[i]);
  return r;
}

Report to_report(const QuadMinorant& phi) {
  Report r;
  r["a"] = phi.a;
  r["l"] = to_report(phi.l);
  r["c"] = phi.c;
  r["flag"] = minorant_flag(phi);
  return r;
}

Report to_report(const IPDecision& d) {
  Report r;
  r["verdict"] = d.verdict_name();
  r["witness"] = d.witness ? to_report(*d.witness) : Report(nullptr);
  r["certificate"] = d.certificate;
  r["margin"] = d.margin;
  return r;
}

Report to_report(const BRResult& br) {
  Report r;
  r["y_bar"] = to_report(br.y_bar);
  r["phi_bar"] = to_report(br.phi_bar);
  r["dist"] = br.dist;
  r["slope_change"] = br.slope_change;
  r["slope_bound"] = br.slope_bound;
  r["curv_change"] = br.curv_change;
  r["curv_target"] = br.curv_target;
  r["offset_change"] = br.offset_change;
  r["offset_bound"] = br.offset_bound;
  return r;
}

Report to_report(const SaddleValues& v) {
  Report r;
  r["lower"] = v.lower;
  r["upper"] = v.upper;
  r["gap"] = v.gap;
  r["best_mixture"] = v.best_mixture;
  r["upper_argmin"] = to_report(v.upper_argmin);
  return r;
}

Report to_report(const IPWitness& w) {
  Report r;
  r["y1"] = w.y1;
  r["y2"] = w.y2;
  r["x1"] = w.x1 ? to_report(*w.x1) : Report(nullptr);
  r["x2"] = w.x2 ? to_report(*w.x2) : Report(nullptr);
  r["phi1"] = to_report(w.phi1);
  r["phi2"] = to_report(w.phi2);
  r["mode"] = w.mode.name();
  r["region"] = w.region.name();
  r["level"] = w.level;
  r["decision"] = to_report(w.decision);
  return r;
}

std::string minorant_flag(const QuadMinorant& phi) {
  std::string s = fmt17(phi.a);
  for (int i = 0; i < phi.l.dim(); ++i) s += "," + fmt17(phi.l[i]);
  s += "," + fmt17(phi.c);
  return s;
}

std::string vector_flag(const Vector& v) {
  std::string s;
  for (int i = 0; i < v.dim(); ++i) s += (i ? "," : "") + fmt17(v[i]);
  return s;
}

}  // namespace phiconv
