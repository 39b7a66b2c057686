#include "tkr/complex_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "tkr/errors.hpp"

namespace tkr {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  fail("ParseError", "line " + std::to_string(line_no) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

CellComplex parse_complex_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  std::string name;
  int dim = -1;
  std::vector<std::vector<std::string>> ids;
  std::vector<bool> cells_seen;
  std::vector<IntMat> bds;
  std::vector<IncidenceHints> hints;
  int current_boundary = -1;

  auto cell_index = [&](int j, const std::string& id) {
    for (std::size_t i = 0; i < ids[j].size(); ++i)
      if (ids[j][i] == id) return static_cast<int>(i);
    return -1;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;

    if (toks[0] == "complex") {
      if (dim >= 0) parse_fail(line_no, "repeated complex header");
      if (toks.size() != 3 || toks[2].rfind("dim=", 0) != 0)
        parse_fail(line_no, "expected: complex <name> dim=<k>");
      name = toks[1];
      try {
        dim = std::stoi(toks[2].substr(4));
      } catch (...) {
        parse_fail(line_no, "bad dimension in header");
      }
      if (dim < 0) parse_fail(line_no, "dimension must be nonnegative");
      ids.assign(dim + 1, {});
      cells_seen.assign(dim + 1, false);
      bds.assign(dim, IntMat());
      hints.assign(dim, IncidenceHints());
      continue;
    }
    if (dim < 0) parse_fail(line_no, "file must start with a complex header");

    if (toks[0] == "cells") {
      if (toks.size() < 2 || toks[1].back() != ':')
        parse_fail(line_no, "expected: cells <j>: <ids...>");
      int j;
      try {
        j = std::stoi(toks[1].substr(0, toks[1].size() - 1));
      } catch (...) {
        parse_fail(line_no, "bad cell dimension");
      }
      if (j < 0 || j > dim) parse_fail(line_no, "cell dimension outside 0..dim");
      if (cells_seen[j]) parse_fail(line_no, "repeated cells line for one dimension");
      cells_seen[j] = true;
      ids[j].assign(toks.begin() + 2, toks.end());
      current_boundary = -1;
      continue;
    }

    if (toks[0] == "boundary") {
      if (toks.size() != 2 || toks[1].back() != ':')
        parse_fail(line_no, "expected: boundary <j>:");
      int j;
      try {
        j = std::stoi(toks[1].substr(0, toks[1].size() - 1));
      } catch (...) {
        parse_fail(line_no, "bad boundary dimension");
      }
      if (j < 1 || j > dim) parse_fail(line_no, "boundary dimension outside 1..dim");
      for (int d = j - 1; d <= j; ++d)
        if (!cells_seen[d])
          parse_fail(line_no, "boundary " + std::to_string(j) + " before its cells lines");
      if (bds[j - 1].rows() == 0 && bds[j - 1].cols() == 0)
        bds[j - 1] = IntMat(ids[j - 1].size(), ids[j].size());
      current_boundary = j;
      continue;
    }

    // Boundary line: <cell-id> = terms
    if (current_boundary < 0) parse_fail(line_no, "unexpected line outside a boundary block");
    if (toks.size() < 2 || toks[1] != "=")
      parse_fail(line_no, "expected: <cell-id> = <terms>");
    int j = current_boundary;
    int col = cell_index(j, toks[0]);
    if (col < 0) parse_fail(line_no, "unknown " + std::to_string(j) + "-cell '" + toks[0] + "'");

    Int pending_sign = 1;
    bool sign_waiting = false;
    for (std::size_t t = 2; t < toks.size(); ++t) {
      const std::string& tok = toks[t];
      if (tok == "+" || tok == "-") {
        if (sign_waiting) parse_fail(line_no, "two signs in a row");
        pending_sign = tok == "-" ? -1 : 1;
        sign_waiting = true;
        continue;
      }
      Int coef = 1;
      std::string face = tok;
      auto star = tok.find('*');
      if (star != std::string::npos) {
        std::string num = tok.substr(0, star);
        if (!is_integer(num)) parse_fail(line_no, "bad coefficient '" + num + "'");
        coef = Int(num);
        face = tok.substr(star + 1);
      } else if (is_integer(tok)) {
        if (Int(tok) != 0) parse_fail(line_no, "bare integer term must be 0");
        sign_waiting = false;
        pending_sign = 1;
        continue;  // "<cell> = 0" marks an explicitly empty boundary
      }
      if (face.empty()) parse_fail(line_no, "missing face id");
      int row = cell_index(j - 1, face);
      if (row < 0)
        parse_fail(line_no, "unknown " + std::to_string(j - 1) + "-cell '" + face + "'");
      coef *= pending_sign;
      pending_sign = 1;
      sign_waiting = false;
      if (coef == 0)
        hints[j - 1].insert({row, col});
      else
        bds[j - 1].at(row, col) += coef;
    }
    if (sign_waiting) parse_fail(line_no, "trailing sign without a term");
  }

  if (dim < 0) parse_fail(line_no, "missing complex header");
  for (int j = 0; j <= dim; ++j)
    if (!cells_seen[j]) parse_fail(line_no, "missing cells line for dimension " + std::to_string(j));
  for (int j = 1; j <= dim; ++j)
    if (bds[j - 1].rows() == 0 && bds[j - 1].cols() == 0)
      bds[j - 1] = IntMat(ids[j - 1].size(), ids[j].size());
  CellComplex k(name, std::move(ids), std::move(bds), std::move(hints));
  ValidationResult v = validate(k);
  if (!v.ok) fail(v.code, v.message);
  return k;
}

std::string serialize_complex(const CellComplex& k) {
  std::ostringstream out;
  out << "complex " << k.name() << " dim=" << k.dim() << "\n";
  for (int j = 0; j <= k.dim(); ++j) {
    out << "cells " << j << ":";
    for (const auto& id : k.cells(j)) out << " " << id;
    out << "\n";
  }
  for (int j = 1; j <= k.dim(); ++j) {
    out << "boundary " << j << ":\n";
    for (std::size_t c = 0; c < k.f(j); ++c) {
      std::vector<std::string> terms;
      for (std::size_t r = 0; r < k.f(j - 1); ++r) {
        const Int& v = k.boundary(j).at(r, c);
        if (v != 0)
          terms.push_back(v.str() + "*" + k.cells(j - 1)[r]);
        else if (k.hints(j).count({static_cast<int>(r), static_cast<int>(c)}))
          terms.push_back("0*" + k.cells(j - 1)[r]);
      }
      if (terms.empty()) continue;
      out << k.cells(j)[c] << " =";
      for (std::size_t i = 0; i < terms.size(); ++i)
        out << (i == 0 ? " " : " + ") << terms[i];
      out << "\n";
    }
  }
  return out.str();
}

CellComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("UnknownName", "cannot open complex file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex_text(buf.str());
}

}  // namespace tkr
