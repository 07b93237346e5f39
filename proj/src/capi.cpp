#include "ultralen.h"

#include "ultralen/acceptance.hpp"
#include "ultralen/coloring.hpp"
#include "ultralen/decompose.hpp"
#include "ultralen/errors.hpp"
#include "ultralen/lab.hpp"
#include "ultralen/profile.hpp"
#include "ultralen/su2.hpp"
#include "ultralen/sym.hpp"
#include "ultralen/torus.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <variant>

struct ulx_torus {
  ul::lie::TorusElement t;
};

struct ulx_cert {
  std::variant<ul::lie::Su2Certificate, ul::lie::DecompositionCertificate> c;
};

namespace {

thread_local std::string last_error;

int set_error(int code, const std::string& msg) {
  last_error = msg;
  return code;
}

template <class F>
int guard(F&& f) {
  try {
    last_error.clear();
    f();
    return ULX_OK;
  } catch (const ul::Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ULX_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ULX_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) ul::fail(ul::Errc::InvalidArgument, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* ulx_version(void) { return "1.0.0"; }

const char* ulx_last_error(void) { return last_error.c_str(); }

const char* ulx_error_name(int code) { return ul::errc_name(static_cast<ul::Errc>(code)); }

void ulx_free_string(char* s) { std::free(s); }

int ulx_experiment_count(void) { return static_cast<int>(ul::lab::experiment_names().size()); }

const char* ulx_experiment_name(int i) {
  const auto& n = ul::lab::experiment_names();
  if (i < 0 || i >= static_cast<int>(n.size())) return nullptr;
  return n[i].c_str();
}

int ulx_run(const char* name, const char* config, char** report, int* ok) {
  return guard([&] {
    need(name, "name");
    need(report, "report");
    auto cfg = ul::lab::Config::parse(config ? config : "");
    auto r = ul::lab::run(name, cfg);
    *report = dup(r.text);
    if (ok) *ok = r.ok;
  });
}

int ulx_acceptance_count(void) { return ul::acc::kCriteria; }

int ulx_acceptance_run(int id, unsigned long long seed, char** line, int* pass) {
  return guard([&] {
    need(line, "line");
    if (id < 1 || id > ul::acc::kCriteria) ul::fail(ul::Errc::IndexOutOfRange, "no such criterion");
    auto r = ul::acc::run_criterion(id, seed);
    *line = dup(ul::acc::format_line(r));
    if (pass) *pass = r.pass;
  });
}

int ulx_cycle_type_lengths(int n, const int* parts, int nparts, int alternating, double* ell_H, double* ell_r,
                           double* ell_c) {
  return guard([&] {
    if (nparts < 0 || (nparts && !parts)) ul::fail(ul::Errc::InvalidArgument, "bad parts");
    auto t = ul::sym::from_parts(n, std::vector<int>(parts, parts + nparts));
    auto amb = alternating ? ul::sym::Ambient::Alt : ul::sym::Ambient::Sym;
    if (ell_H) *ell_H = ul::to_double(ul::sym::hamming_length(t));
    if (ell_r) *ell_r = ul::to_double(ul::sym::rank_length_perm(t));
    if (ell_c) *ell_c = ul::sym::conj_length_perm(t, amb);
  });
}

int ulx_torus_create(const char* type, int rank, const char* angles, ulx_torus** out) {
  return guard([&] {
    need(type, "type");
    need(angles, "angles");
    need(out, "out");
    std::vector<ul::Rat> a;
    std::stringstream ss(angles);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) a.push_back(ul::parse_rat(item));
    auto t = ul::lie::TorusElement::make(ul::lie::parse_type(type), rank, a);
    *out = new ulx_torus{std::move(t)};
  });
}

void ulx_torus_free(ulx_torus* t) { delete t; }

int ulx_torus_lambda(const ulx_torus* t, double* value) {
  return guard([&] {
    need(t, "torus");
    need(value, "value");
    *value = ul::to_double(ul::lie::lambda_of(t->t));
  });
}

int ulx_torus_lambda_tilde(const ulx_torus* t, double* value, int* exact) {
  return guard([&] {
    need(t, "torus");
    need(value, "value");
    auto r = ul::lie::lambda_tilde(t->t);
    *value = ul::to_double(r.value);
    if (exact) *exact = r.exact;
  });
}

int ulx_torus_ell1_prime(const ulx_torus* t, double* value) {
  return guard([&] {
    need(t, "torus");
    need(value, "value");
    *value = ul::lie::ell1_prime(ul::lie::spectrum(t->t), t->t.rank);
  });
}

int ulx_torus_profile(const ulx_torus* t, double* values, int cap, int* len) {
  return guard([&] {
    need(t, "torus");
    auto p = ul::prof::profile_of(t->t);
    int n = static_cast<int>(p.values.size());
    if (len) *len = n;
    for (int i = 0; i < n && i < cap; ++i) values[i] = p.values[i];
  });
}

int ulx_su2_decompose(const char* theta_g, const char* theta_h, int m, ulx_cert** out) {
  return guard([&] {
    need(theta_g, "theta_g");
    need(theta_h, "theta_h");
    need(out, "out");
    auto c = ul::lie::su2_decompose(ul::parse_rat(theta_g), ul::parse_rat(theta_h), m);
    *out = new ulx_cert{std::move(c)};
  });
}

int ulx_torus_decompose(const ulx_torus* g, const ulx_torus* h, int m, ulx_cert** out) {
  return guard([&] {
    need(g, "g");
    need(h, "h");
    need(out, "out");
    *out = new ulx_cert{ul::lie::torus_decompose_typeA(g->t, h->t, m)};
  });
}

int ulx_large_rank_decompose(const ulx_torus* g, const ulx_torus* h, int k, int m, ulx_cert** out) {
  return guard([&] {
    need(g, "g");
    need(h, "h");
    need(out, "out");
    *out = new ulx_cert{ul::lie::large_rank_decompose(g->t, h->t, k, m)};
  });
}

void ulx_cert_free(ulx_cert* c) { delete c; }

int ulx_cert_count(const ulx_cert* c) {
  if (!c) return -1;
  return std::visit([](const auto& x) { return x.count(); }, c->c);
}

double ulx_cert_error(const ulx_cert* c) {
  if (!c) return -1;
  return std::visit([](const auto& x) { return x.product_error; }, c->c);
}

long long ulx_cert_bound(const ulx_cert* c) {
  if (!c) return -1;
  if (auto* s = std::get_if<ul::lie::Su2Certificate>(&c->c)) return s->m;
  return std::get<ul::lie::DecompositionCertificate>(c->c).bound;
}

int ulx_cert_exact(const ulx_cert* c) {
  if (!c) return 0;
  if (std::holds_alternative<ul::lie::Su2Certificate>(c->c)) return 1;
  return std::get<ul::lie::DecompositionCertificate>(c->c).exact;
}

int ulx_cert_json(const ulx_cert* c, char** json) {
  return guard([&] {
    need(c, "certificate");
    need(json, "json");
    if (auto* s = std::get_if<ul::lie::Su2Certificate>(&c->c)) {
      nlohmann::ordered_json j;
      j["theta_g"] = ul::rat_str(s->theta_g);
      j["theta_h"] = ul::rat_str(s->theta_h);
      j["m"] = s->m;
      j["count"] = s->count();
      auto xs = nlohmann::ordered_json::array();
      for (const auto& q : s->conjugators) xs.push_back({q.w, q.x, q.y, q.z});
      j["conjugators"] = xs;
      j["signs"] = s->signs;
      j["product_error"] = s->product_error;
      *json = dup(j.dump(2));
    } else {
      *json = dup(ul::lab::certificate_json(std::get<ul::lie::DecompositionCertificate>(c->c)));
    }
  });
}

int ulx_strong_color(int n, const int* blocks, int nblocks, int s, int* colors) {
  return guard([&] {
    need(blocks, "blocks");
    need(colors, "colors");
    if (nblocks < 0 || s < 1) ul::fail(ul::Errc::InvalidArgument, "bad block shape");
    ul::color::Blocks b(nblocks);
    for (int i = 0; i < nblocks; ++i) b[i].assign(blocks + i * s, blocks + (i + 1) * s);
    auto col = ul::color::strong_color_cycle(n, b, s);
    std::memcpy(colors, col.data(), col.size() * sizeof(int));
  });
}

}  // extern "C"
