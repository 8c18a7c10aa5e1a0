#include "tcplex/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tcplex {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok.front() == '#') break;  // comment tail
    out.push_back(tok);
  }
  return out;
}

}  // namespace

ParsedPair parse_pair_text(std::istream& in, const std::string& origin) {
  std::string k_name, l_name;
  std::vector<std::vector<std::string>> k_facets, l_gens;
  bool have_k = false, have_l = false;
  bool in_l = false;

  std::string line;
  int lineno = 0;
  auto err = [&](const std::string& what) {
    return InputError(origin + ":" + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "complex" || toks[0] == "subcomplex") {
      if (toks.size() < 2) throw err("'" + toks[0] + "' needs a name");
      // The name is the rest of the line, so product names ("K x L")
      // survive a round trip.
      std::string name = toks[1];
      for (size_t i = 2; i < toks.size(); ++i) name += " " + toks[i];
      toks[1] = std::move(name);
      if (toks[0] == "complex") {
        if (have_k) throw err("duplicate 'complex' block");
        have_k = true;
        in_l = false;
        k_name = toks[1];
      } else {
        if (!have_k) throw err("'subcomplex' before any 'complex' block");
        if (have_l) throw err("duplicate 'subcomplex' block");
        have_l = true;
        in_l = true;
        l_name = toks[1];
      }
      continue;
    }

    if (!have_k) throw err("facet line before any 'complex' block");
    (in_l ? l_gens : k_facets).push_back(std::move(toks));
  }

  if (!have_k) throw InputError(origin + ": no 'complex' block");

  ParsedPair pair;
  try {
    pair.K = build_complex(k_name, k_facets);
    if (have_l) {
      if (l_gens.empty())
        throw InputError("subcomplex '" + l_name + "' has no simplices");
      pair.L = Subcomplex::from_labels(pair.K, l_name, l_gens);
    }
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
  return pair;
}

ParsedPair parse_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_pair_text(in, path);
}

namespace {

void emit_facets(std::string& out, const ComplexPtr& C) {
  for (const auto& f : C->facets()) {
    bool first = true;
    f.for_each([&](int v) {
      if (!first) out += ' ';
      out += C->label(v);
      first = false;
    });
    out += '\n';
  }
}

}  // namespace

std::string serialize_pair(const ComplexPtr& K, const Subcomplex* L) {
  std::string out;
  out += "# " + K->name() + ": " + std::to_string(K->vertex_count()) +
         " vertices, " + std::to_string(K->facet_count()) +
         " facets, dimension " + std::to_string(K->dimension()) + "\n";
  out += "complex " + K->name() + "\n";
  emit_facets(out, K);
  if (L) {
    out += "\nsubcomplex " + L->name() + "\n";
    emit_facets(out, L->complex());
  }
  return out;
}

void write_pair_file(const std::string& path, const ComplexPtr& K,
                     const Subcomplex* L) {
  write_text_file(path, serialize_pair(K, L));
}

// ---------------------------------------------------------------------------
// JSON helpers

namespace {

ordered_json facets_by_label(const ComplexPtr& C) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : C->facets()) {
    ordered_json labs = ordered_json::array();
    f.for_each([&](int v) { labs.push_back(C->label(v)); });
    arr.push_back(std::move(labs));
  }
  return arr;
}

ordered_json complex_json(const ComplexPtr& C) {
  return {{"name", C->name()}, {"facets", facets_by_label(C)}};
}

// A product vertex as the pair [label in K, label in L].
ordered_json pair_label(const CoverCertificate& cert, VertexId pv) {
  auto [a, b] = cert.target->pair_split(pv);
  return ordered_json::array(
      {cert.K->label(a), cert.L->complex()->label(b)});
}

ordered_json vertex_json(const CoverCertificate& cert, VertexId pv) {
  if (cert.L) return pair_label(cert, pv);
  return ordered_json(cert.K->label(pv));
}

ordered_json map_json(const CoverCertificate& cert, const SimplicialMap& m) {
  ordered_json arr = ordered_json::array();
  for (VertexId img : m.at) arr.push_back(vertex_json(cert, img));
  return arr;
}

}  // namespace

std::string certificate_json(const CoverCertificate& cert, int value,
                             const BoundsReport& bounds, uint64_t visited,
                             const std::vector<std::string>& notes) {
  ordered_json j;
  j["format"] = "tcplex-cover/1";
  j["kind"] = cert.L ? "farber" : "categorical";
  j["value"] = value;
  j["K"] = complex_json(cert.K);
  if (cert.L)
    j["L"] = {{"name", cert.L->name()},
              {"facets", facets_by_label(cert.L->complex())}};

  ordered_json pieces = ordered_json::array();
  for (const auto& p : cert.pieces) {
    ordered_json jp;
    jp["name"] = p.piece.name();
    ordered_json facets = ordered_json::array();
    for (const auto& f : p.piece.complex()->facets()) {
      ordered_json verts = ordered_json::array();
      f.for_each(
          [&](int v) { verts.push_back(vertex_json(cert, p.piece.to_parent(v))); });
      facets.push_back(std::move(verts));
    }
    jp["facets"] = std::move(facets);

    if (cert.L && p.farber) {
      ordered_json sig = ordered_json::array();
      for (VertexId y : p.farber->section.at)
        sig.push_back(cert.L->complex()->label(y));
      jp["sigma"] = std::move(sig);
      ordered_json chain = ordered_json::array();
      for (const auto& m : p.farber->chain.maps)
        chain.push_back(map_json(cert, m));
      jp["chain"] = std::move(chain);
    } else if (!cert.L && p.categorical) {
      jp["vertex"] = cert.K->label(p.categorical->vertex);
      ordered_json chain = ordered_json::array();
      for (const auto& m : p.categorical->chain.maps)
        chain.push_back(map_json(cert, m));
      jp["chain"] = std::move(chain);
    }
    pieces.push_back(std::move(jp));
  }
  j["pieces"] = std::move(pieces);

  j["bounds"] = {{"scat_K", bounds.scat_K},
                 {"tc_K", bounds.tc_K},
                 {"scat_KK", bounds.scat_KK}};
  j["visited"] = visited;
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

namespace {

std::vector<std::vector<std::string>> string_lists(const ordered_json& arr,
                                                   const std::string& what) {
  if (!arr.is_array()) throw InputError(what + " must be an array");
  std::vector<std::vector<std::string>> out;
  for (const auto& inner : arr) {
    if (!inner.is_array()) throw InputError(what + " entries must be arrays");
    std::vector<std::string> labs;
    for (const auto& s : inner) labs.push_back(s.get<std::string>());
    out.push_back(std::move(labs));
  }
  return out;
}

}  // namespace

CoverCertificate load_certificate_json(const std::string& text,
                                       const std::string& origin) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw InputError(origin + ": not valid JSON: " + e.what());
  }

  try {
    if (j.value("format", "") != "tcplex-cover/1")
      throw InputError("unknown certificate format");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "farber" && kind != "categorical")
      throw InputError("unknown certificate kind '" + kind + "'");
    const bool farber = kind == "farber";

    CoverCertificate cert;
    cert.K = build_complex(j.at("K").at("name").get<std::string>(),
                           string_lists(j.at("K").at("facets"), "K.facets"));
    if (farber) {
      cert.L = Subcomplex::from_labels(
          cert.K, j.at("L").at("name").get<std::string>(),
          string_lists(j.at("L").at("facets"), "L.facets"));
      cert.target = categorical_product(cert.K, cert.L->complex());
    } else {
      cert.target = cert.K;
    }

    // A serialized vertex of the target: [label, label] for products,
    // plain label otherwise.
    auto target_vertex = [&](const ordered_json& v) -> VertexId {
      if (farber) {
        if (!v.is_array() || v.size() != 2)
          throw InputError("product vertices must be [K-label, L-label]");
        return cert.target->pair_index(
            cert.K->vertex_checked(v[0].get<std::string>()),
            cert.L->complex()->vertex_checked(v[1].get<std::string>()));
      }
      return cert.K->vertex_checked(v.get<std::string>());
    };

    for (const auto& jp : j.at("pieces")) {
      std::vector<Simplex> gens;
      for (const auto& jf : jp.at("facets")) {
        Simplex s;
        for (const auto& v : jf) s.set(target_vertex(v));
        gens.push_back(s);
      }
      CoverPiece cp{Subcomplex(cert.target, std::move(gens),
                               jp.value("name", "piece")),
                    std::nullopt, std::nullopt};
      const size_t nv = size_t(cp.piece.complex()->vertex_count());

      auto load_chain = [&](const ordered_json& jc) {
        ContiguityChain chain;
        for (const auto& jm : jc) {
          if (!jm.is_array() || jm.size() != nv)
            throw InputError("chain map has wrong arity for piece '" +
                             cp.piece.name() + "'");
          SimplicialMap m{cp.piece.complex(), cert.target, {}};
          for (const auto& v : jm) m.at.push_back(target_vertex(v));
          chain.maps.push_back(std::move(m));
        }
        return chain;
      };
      if (farber) {
        const auto& js = jp.at("sigma");
        if (!js.is_array() || js.size() != nv)
          throw InputError("sigma has wrong arity for piece '" +
                           cp.piece.name() + "'");
        SimplicialMap sigma{cp.piece.complex(), cert.L->complex(), {}};
        for (const auto& v : js)
          sigma.at.push_back(
              cert.L->complex()->vertex_checked(v.get<std::string>()));
        cp.farber =
            FarberWitness{std::move(sigma), load_chain(jp.at("chain"))};
      } else {
        cp.categorical = CategoricalWitness{
            cert.K->vertex_checked(jp.at("vertex").get<std::string>()),
            load_chain(jp.at("chain"))};
      }
      cert.pieces.push_back(std::move(cp));
    }
    return cert;
  } catch (const ordered_json::exception& e) {
    throw InputError(origin + ": malformed certificate: " + e.what());
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

CoverCertificate load_certificate_file(const std::string& path) {
  return load_certificate_json(read_text_file(path), path);
}

void write_certificate_file(const std::string& path,
                            const CoverCertificate& cert, int value,
                            const BoundsReport& bounds, uint64_t visited,
                            const std::vector<std::string>& notes) {
  write_text_file(path, certificate_json(cert, value, bounds, visited, notes));
}

// ---------------------------------------------------------------------------
// Result renderings

std::string plan_json(const CoverCertificate& cert, const MotionPlan& plan) {
  ordered_json j;
  j["format"] = "tcplex-plan/1";
  j["x"] = cert.K->label(plan.x);
  j["y"] = cert.K->label(plan.y);
  j["piece"] = plan.piece_index;
  j["piece_name"] = cert.pieces[size_t(plan.piece_index)].piece.name();
  ordered_json pts = ordered_json::array();
  for (VertexId p : plan.points) pts.push_back(cert.K->label(p));
  j["points"] = std::move(pts);
  j["tail_start"] = plan.tail_start;
  return j.dump(2) + "\n";
}

std::string bounds_json(const BoundsCheck& bc) {
  ordered_json j;
  j["format"] = "tcplex-bounds/1";
  j["ok"] = bc.ok;
  j["scat_K"] = bc.bounds.scat_K;
  j["tc_KL"] = bc.tc_KL;
  j["tc_K"] = bc.bounds.tc_K;
  j["scat_KK"] = bc.bounds.scat_KK;
  j["l_is_vertex"] = bc.l_is_vertex;
  j["l_categorical"] = bc.l_categorical;
  j["lines"] = bc.lines;
  return j.dump(2) + "\n";
}

std::string core_json(const CollapseTrace& trace) {
  ordered_json j;
  j["format"] = "tcplex-core/1";
  j["start"] = complex_json(trace.start);
  ordered_json steps = ordered_json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"removed", s.removed}, {"dominator", s.dominator}});
  j["steps"] = std::move(steps);
  j["core"] = complex_json(trace.core);
  j["strongly_collapsible"] = trace.core->vertex_count() == 1;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace tcplex
