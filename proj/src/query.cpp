#include "loops/query.hpp"

#include <atomic>
#include <charconv>
#include <istream>
#include <thread>
#include <sstream>
#include <stdexcept>

#include "loops/bracket.hpp"
#include "loops/surface.hpp"

namespace loops {

namespace {

using nlohmann::json;

long parse_long(std::string_view s, const char* what) {
  long v = 0;
  s.remove_prefix(std::min(s.find_first_not_of(' '), s.size()));
  auto end = s.find_last_not_of(' ');
  if (end != std::string_view::npos) s = s.substr(0, end + 1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " '" +
                                std::string(s) + "'");
  }
  return v;
}

json term_json(int sign, const Word& first, const Word& second) {
  return json{{"sign", sign}, {"first", first.str()}, {"second", second.str()}};
}

void render_bracket(const BracketResult& br, bool show_raw, json& out,
                    std::ostringstream& text) {
  out["raw_count"] = br.raw.size();
  out["terms_count"] = br.terms_count();
  json reduced = json::array();
  for (const auto& [key, coef] : br.reduced) {
    reduced.push_back(json{{"first", key.first.str()},
                           {"second", key.second.str()},
                           {"coef", coef}});
  }
  out["reduced"] = reduced;
  text << "raw crossings: " << br.raw.size() << '\n';
  text << "reduced terms: " << br.reduced.size()
       << " (terms count " << br.terms_count() << ")\n";
  for (const auto& [key, coef] : br.reduced) {
    text << "  " << (coef > 0 ? "+" : "") << coef << "  " << key.first.str()
         << " . " << key.second.str() << '\n';
  }
  if (show_raw) {
    json raw = json::array();
    for (const ChordTerm& t : br.raw) {
      raw.push_back(term_json(t.sign, t.first, t.second));
    }
    out["raw"] = raw;
    text << "raw terms:\n";
    for (const ChordTerm& t : br.raw) {
      text << "  " << (t.sign > 0 ? "+1" : "-1") << "  " << t.first.str()
           << " . " << t.second.str() << '\n';
    }
  }
}

}  // namespace

QueryRecord query_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("query record must be a JSON object");
  }
  QueryRecord q;
  q.mode = j.value("mode", "");
  q.surface = j.value("surface", "");
  q.w1 = j.value("w1", "");
  q.w2 = j.value("w2", "");
  if (j.contains("p")) q.p = j.at("p").get<long>();
  if (j.contains("q")) q.q = j.at("q").get<long>();
  return q;
}

TorusClass parse_torus_class(std::string_view text) {
  auto open = text.find('(');
  auto comma = text.find(',');
  auto close = text.find(')');
  if (open == std::string_view::npos || comma == std::string_view::npos ||
      close == std::string_view::npos || !(open < comma && comma < close)) {
    throw std::invalid_argument("torus class must look like (m,l), got '" +
                                std::string(text) + "'");
  }
  TorusClass c;
  c.m = parse_long(text.substr(open + 1, comma - open - 1), "torus coordinate");
  c.l = parse_long(text.substr(comma + 1, close - comma - 1),
                   "torus coordinate");
  return c;
}

ResultRecord run_query(const QueryRecord& q, bool show_raw) {
  ResultRecord res;
  json out;
  out["schema"] = kResultSchema;
  out["mode"] = q.mode;
  std::ostringstream text;
  text << "mode: " << q.mode << '\n';
  try {
    if (q.mode == "torus") {
      TorusClass c1 = parse_torus_class(q.w1);
      TorusClass c2 = parse_torus_class(q.w2);
      long v = torus_min_intersection(c1, c2);
      out["w1"] = q.w1;
      out["w2"] = q.w2;
      out["value"] = v;
      text << "w1: " << q.w1 << "\nw2: " << q.w2 << '\n';
      text << "value: " << v << '\n';
    } else if (q.mode == "amr" || q.mode == "goldman" || q.mode == "minint" ||
               q.mode == "selfint" || q.mode == "theorem2") {
      RibbonRose rose = RibbonRose::parse(q.surface);
      out["surface"] = rose.str();
      text << "surface: " << rose.str() << '\n';
      FreeClass a1 = free_class(Word::parse(q.w1));
      out["w1"] = q.w1;
      out["class1"] = a1.str();
      text << "w1: " << q.w1 << "  class <" << a1.str() << ">\n";
      if (q.mode == "selfint") {
        long v = self_intersection(a1, rose);
        out["value"] = v;
        text << "value: " << v << '\n';
      } else if (q.mode == "theorem2") {
        if (!q.p || !q.q) {
          throw std::invalid_argument("theorem2 needs integers p and q");
        }
        out["p"] = *q.p;
        out["q"] = *q.q;
        long v = theorem2_selfint(a1, *q.p, *q.q, rose);
        out["value"] = v;
        text << "p: " << *q.p << "\nq: " << *q.q << '\n';
        text << "value: " << v << '\n';
      } else {
        FreeClass a2 = free_class(Word::parse(q.w2));
        out["w2"] = q.w2;
        out["class2"] = a2.str();
        text << "w2: " << q.w2 << "  class <" << a2.str() << ">\n";
        if (q.mode == "goldman") {
          auto gb = goldman_bracket(a1, a2, rose);
          long total = 0;
          json classes = json::array();
          for (const auto& [cls, coef] : gb) {
            classes.push_back(json{{"class", cls.str()}, {"coef", coef}});
            total += coef < 0 ? -coef : coef;
          }
          out["classes"] = classes;
          out["terms_count"] = total;
          out["value"] = total;
          text << "classes: " << gb.size() << " (terms count " << total
               << ")\n"
               << "value: " << total << '\n';
          for (const auto& [cls, coef] : gb) {
            text << "  " << (coef > 0 ? "+" : "") << coef << "  <" << cls.str()
                 << ">\n";
          }
        } else {
          BracketResult br = amr_bracket(a1, a2, rose);
          render_bracket(br, show_raw, out, text);
          if (q.mode == "minint") {
            long v = min_intersection(a1, a2, rose);
            out["value"] = v;
            text << "value: " << v << '\n';
          } else {
            out["value"] = br.terms_count();
            text << "value: " << br.terms_count() << '\n';
          }
        }
      }
    } else {
      throw std::invalid_argument("unknown mode '" + q.mode + "'");
    }
  } catch (const std::exception& e) {
    res.ok = false;
    res.error = e.what();
    out["ok"] = false;
    out["error"] = res.error;
    res.json = out;
    res.text = "error: " + res.error + '\n';
    return res;
  }
  out["ok"] = true;
  res.json = out;
  res.text = text.str();
  return res;
}

std::vector<ResultRecord> run_batch(std::istream& in, bool show_raw) {
  std::vector<std::pair<long, std::string>> lines;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(lineno, line);
  }
  std::vector<ResultRecord> out(lines.size());
  auto work = [&](std::size_t idx) {
    auto [no, text] = lines[idx];
    ResultRecord res;
    try {
      json j = json::parse(text);
      res = run_query(query_from_json(j), show_raw);
    } catch (const std::exception& e) {
      res.ok = false;
      res.error = e.what();
      res.json = nlohmann::json{{"schema", kResultSchema},
                                {"ok", false},
                                {"error", res.error}};
      res.text = "error at line " + std::to_string(no) + ": " + res.error +
                 '\n';
    }
    res.json["line"] = no;
    res.text = "record " + std::to_string(no) + ":\n" + res.text;
    out[idx] = std::move(res);
  };
  // Records are independent and everything below run_query is pure, so
  // they can run concurrently; results land at their input position.
  unsigned workers = std::min<unsigned>(
      {std::thread::hardware_concurrency(), 8u,
       static_cast<unsigned>(lines.size())});
  if (workers <= 1) {
    for (std::size_t i = 0; i < lines.size(); ++i) work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < lines.size();
           i = next.fetch_add(1)) {
        work(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace loops
