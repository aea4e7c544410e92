#include "dpc/code.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "dpc/errors.hpp"

namespace dpc {

int claimed_distance_for_family(const std::string& family) {
  if (family == "d3") return 3;
  if (family == "d5") return 5;
  if (family == "d4conf") return 4;
  if (family == "preparata") return 6;
  return 0;
}

void write_code_file(const Code& code, std::ostream& out) {
  out << "# family: " << (code.meta.family.empty() ? "unknown" : code.meta.family) << "\n";
  if (code.meta.field) {
    out << "# m: " << code.meta.field->m << "\n";
    out << "# modulus: 0x" << std::hex << code.meta.field->modulus << std::dec << "\n";
    out << "# generator: 0x" << std::hex << code.meta.field->generator << std::dec << "\n";
  }
  if (!code.meta.op_literal.empty()) out << "# operator: " << code.meta.op_literal << "\n";
  if (code.meta.q_syndrome)
    out << "# syndrome: 0x" << std::hex << *code.meta.q_syndrome << std::dec << "\n";
  if (code.alphabet == Alphabet::Ternary) {
    std::vector<TernaryWord> sorted = code.twords;
    std::sort(sorted.begin(), sorted.end(),
              [](const TernaryWord& a, const TernaryWord& b) { return lex_less(a, b); });
    for (const auto& w : sorted) out << to_string(w) << "\n";
  } else {
    std::vector<BinaryWord> sorted = code.bwords;
    std::sort(sorted.begin(), sorted.end(),
              [](const BinaryWord& a, const BinaryWord& b) { return lex_less(a, b); });
    for (const auto& w : sorted) out << to_string(w) << "\n";
  }
}

void write_code_file(const Code& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  write_code_file(code, out);
  if (!out) throw IoError("write failed: " + path);
}

Code read_code_file(std::istream& in) {
  std::map<std::string, std::string> headers;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      const auto colon = body.find(':');
      if (colon == std::string::npos) continue;
      std::string k = body.substr(0, colon);
      std::string v = body.substr(colon + 1);
      auto trim = [](std::string& s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
      };
      trim(k);
      trim(v);
      headers[k] = v;
      continue;
    }
    lines.push_back(line);
  }
  if (lines.empty()) throw IoError("code file holds no words");

  Code code;
  code.meta.family = headers.count("family") ? headers["family"] : "";
  if (headers.count("m")) {
    FieldSpec fs;
    fs.m = std::stoi(headers["m"]);
    fs.modulus = headers.count("modulus")
                     ? static_cast<std::uint32_t>(std::stoul(headers["modulus"], nullptr, 0))
                     : default_modulus(fs.m);
    fs.generator = headers.count("generator")
                       ? static_cast<fe_t>(std::stoul(headers["generator"], nullptr, 0))
                       : 2;
    code.meta.field = fs;
  }
  if (headers.count("operator")) {
    code.meta.op_literal = headers["operator"];
    code.meta.op_provenance = headers["operator"];
  }
  if (headers.count("syndrome"))
    code.meta.q_syndrome = static_cast<fe_t>(std::stoul(headers["syndrome"], nullptr, 0));

  const bool ternary = lines[0].find('*') != std::string::npos;
  code.alphabet = ternary ? Alphabet::Ternary : Alphabet::Binary;
  code.n = static_cast<int>(lines[0].size());
  try {
    for (const auto& text : lines) {
      if (static_cast<int>(text.size()) != code.n) throw IoError("word length varies in code file");
      if (ternary)
        code.twords.push_back(parse_ternary(text));
      else
        code.bwords.push_back(parse_binary(text));
    }
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("malformed word in code file: ") + e.what());
  }
  code.claimed_distance = claimed_distance_for_family(code.meta.family);
  code.claimed_cardinality = code.size();
  return code;
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return read_code_file(in);
}

}  // namespace dpc
