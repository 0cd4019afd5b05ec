#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace simploid {

// Closed list of claim tags used in reports.
inline const std::vector<std::string>& lemma_tags() {
  static const std::vector<std::string> tags{
      "Definition k-groupoid",
      "Definition k-category",
      "Definition fibration",
      "Definition hypercover",
      "Definition quasi-fibration",
      "Definition weak equivalence",
      "Definition expansion",
      "Lemma P(f)",
      "Lemma expansion",
      "Lemma fibrations",
      "Lemma pullback",
      "Lemma groupoid:complete",
      "Lemma Hard",
      "Lemma Moore",
      "Lemma Moore2",
      "Lemma Moore3",
      "Lemma proper",
      "Lemma DD1",
      "Theorem We",
      "Lemma lambda",
      "Corollary lambda1",
      "Corollary lambda2",
      "Theorem join-criterion",
      "Proposition G",
      "Lemma GGG",
      "Lemma mu",
      "Theorem Smooth Part 1",
      "Theorem Smooth Part 2",
      "Lemma psi",
      "Proposition Markl",
      "Lemma smooth",
      "Cochain algebra",
      "Suite",
  };
  return tags;
}

// throws std::logic_error for a tag outside the list
const std::string& lemma_tag(const std::string& name);

struct ReportCase {
  std::string name;
  bool verdict = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct Report {
  std::string command;
  std::string lemma;
  nlohmann::json config = nlohmann::json::object();
  std::vector<ReportCase> cases;
  nlohmann::json output;  // artifact produced by the command, if any
  nlohmann::json timings;  // only filled when requested
  bool verdict() const;
  void add(std::string name, bool verdict, nlohmann::json detail = nlohmann::json::object());
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace simploid
