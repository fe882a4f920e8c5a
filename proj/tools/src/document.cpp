#include "qhad_cli/document.hpp"

#include <cmath>

namespace qhad::cli {

namespace {

using Kind = ParseError::Kind;

Quaternion entry_from_json(const Json& e, std::size_t i, std::size_t j) {
  const std::string where = "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  if (!e.is_array()) {
    throw ParseError(Kind::malformed, "malformed document: " + where + " is not an array");
  }
  if (e.size() != 4) {
    throw ParseError(Kind::dimension, "dimension mismatch: " + where + " has " +
                                          std::to_string(e.size()) + " components, expected 4");
  }
  double c[4];
  for (std::size_t k = 0; k < 4; ++k) {
    if (!e[k].is_number()) {
      throw ParseError(Kind::malformed, "malformed document: " + where + " has a non-numeric component");
    }
    c[k] = e[k].get<double>();
    if (!std::isfinite(c[k])) {
      throw ParseError(Kind::non_finite, "non-finite value in " + where);
    }
  }
  return {c[0], c[1], c[2], c[3]};
}

std::size_t order_of(const Json& doc) {
  if (!doc.is_object()) {
    throw ParseError(Kind::malformed, "malformed document: top level must be an object");
  }
  if (!doc.contains("order") || !doc["order"].is_number_integer() || doc["order"].get<long long>() < 1) {
    throw ParseError(Kind::malformed, "malformed document: 'order' must be a positive integer");
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError(Kind::malformed, "malformed document: 'entries' must be an array");
  }
  const auto n = doc["order"].get<std::size_t>();
  const Json& rows = doc["entries"];
  if (rows.size() != n) {
    throw ParseError(Kind::dimension, "dimension mismatch: order " + std::to_string(n) + " but " +
                                          std::to_string(rows.size()) + " rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array()) {
      throw ParseError(Kind::malformed, "malformed document: row " + std::to_string(i) + " is not an array");
    }
    if (rows[i].size() != n) {
      throw ParseError(Kind::dimension, "dimension mismatch: row " + std::to_string(i) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(n));
    }
  }
  return n;
}

Json base_document(std::size_t n, const Json& metadata) {
  Json doc = Json::object();
  doc["order"] = n;
  doc["entries"] = Json::array();
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc;
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::out_of_range& e) {
    // nlohmann reports literals beyond double range (1e999) this way.
    throw ParseError(Kind::non_finite, std::string("non-finite value: ") + e.what());
  } catch (const Json::exception& e) {
    throw ParseError(Kind::malformed, std::string("malformed document: ") + e.what());
  }
}

QMatrix matrix_from_json(const Json& doc) {
  const std::size_t n = order_of(doc);
  QMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, j) = entry_from_json(doc["entries"][i][j], i, j);
    }
  }
  return h;
}

QMatrix parse_matrix(std::string_view text) { return matrix_from_json(parse_document(text)); }

Json quaternion_to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Json matrix_to_json(const QMatrix& h, const Json& metadata) {
  Json doc = base_document(h.order(), metadata);
  for (std::size_t i = 0; i < h.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < h.order(); ++j) row.push_back(quaternion_to_json(h(i, j)));
    doc["entries"].push_back(std::move(row));
  }
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string emit_matrix(const QMatrix& h, const Json& metadata) {
  return dump(matrix_to_json(h, metadata));
}

Json complex_to_json(const ComplexMatrix& m, const Json& metadata) {
  Json doc = base_document(static_cast<std::size_t>(m.rows()), metadata);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag(), 0.0, 0.0}));
    }
    doc["entries"].push_back(std::move(row));
  }
  return doc;
}

Json real_to_json(const RealMatrix& m, const Json& metadata) {
  Json doc = base_document(static_cast<std::size_t>(m.rows()), metadata);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j), 0.0, 0.0, 0.0}));
    doc["entries"].push_back(std::move(row));
  }
  return doc;
}

ComplexMatrix complex_from_json(const Json& doc, double tol) {
  const QMatrix h = matrix_from_json(doc);
  const auto n = static_cast<Eigen::Index>(h.order());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Quaternion& q = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (std::abs(q.y) > tol || std::abs(q.z) > tol) {
        throw ParseError(Kind::malformed, "malformed document: entry has j or k components, expected a complex matrix");
      }
      m(i, j) = {q.w, q.x};
    }
  }
  return m;
}

RealMatrix real_from_json(const Json& doc, double tol) {
  const QMatrix h = matrix_from_json(doc);
  const auto n = static_cast<Eigen::Index>(h.order());
  RealMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Quaternion& q = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (q.imag_norm() > tol) {
        throw ParseError(Kind::malformed, "malformed document: entry has imaginary components, expected a real matrix");
      }
      m(i, j) = q.w;
    }
  }
  return m;
}

Json report_to_json(const VerificationReport& r) {
  return Json{{"pass", r.pass},
              {"tolerance", r.tolerance},
              {"max_deviation", r.max_dev()},
              {"deviations",
               {{"entry_norm", r.entry_norm_dev}, {"gram_row", r.gram_row_dev}, {"gram_col", r.gram_col_dev}}}};
}

std::string emit_report(const VerificationReport& r) { return dump(report_to_json(r)); }

Json profile_to_json(const ButsonProfile& p) {
  Json doc = Json::object();
  doc["order"] = p.order;
  doc["minimal_r"] = p.minimal_r ? Json(*p.minimal_r) : Json(nullptr);
  doc["q_axis"] = p.q_axis ? quaternion_to_json(*p.q_axis) : Json(nullptr);
  Json orders = Json::array();
  for (std::size_t i = 0; i < p.order; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < p.order; ++j) {
      const auto& o = p.per_entry_order[i * p.order + j];
      row.push_back(o ? Json(*o) : Json(nullptr));
    }
    orders.push_back(std::move(row));
  }
  doc["per_entry_order"] = std::move(orders);
  return doc;
}

Json classification_to_json(const Classification& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  return Json{{"label", std::string(label_name(c.label))},
              {"params", std::move(params)},
              {"conjugator", quaternion_to_json(c.conjugator)},
              {"rotation", c.rotation},
              {"match_residual", c.match_residual},
              {"detail", c.detail}};
}

Json solution_to_json(const CirculantSolution& s) {
  Json core = Json::array();
  for (const auto& q : s.core) core.push_back(quaternion_to_json(q));
  Json doc = classification_to_json(s.classification);
  doc["order"] = s.order;
  doc["core"] = std::move(core);
  doc["residual"] = s.residual;
  doc["restart"] = s.restart;
  return doc;
}

}  // namespace qhad::cli
