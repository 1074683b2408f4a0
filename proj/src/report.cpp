#include "galois/report.hpp"

#include <charconv>
#include <stdexcept>

namespace galois {

using nlohmann::ordered_json;

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_unsigned(std::string_view text, int base, std::string_view what) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string render_seq(const Seq& xs) { return "[" + format_csv(xs) + "]"; }

const std::string& json_string(const ordered_json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a string, got " + j.dump());
  return j.get_ref<const std::string&>();
}

const ordered_json& json_array(const ordered_json& j, std::size_t arity = 0) {
  if (!j.is_array() || (arity != 0 && j.size() != arity)) {
    throw std::invalid_argument("expected an array, got " + j.dump());
  }
  return j;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

CheckReport merge_reports(std::string law, std::string subject, std::span<const CheckReport> parts) {
  CheckReport out;
  out.law = std::move(law);
  out.subject = std::move(subject);
  for (const auto& part : parts) {
    out.cases_checked += part.cases_checked;
    out.evaluations += part.evaluations;
    out.elapsed += part.elapsed;
    if (out.verdict == Verdict::pass && part.verdict != Verdict::pass) {
      out.verdict = part.verdict;
      out.counterexample = part.counterexample;
      out.clause = part.clause;
    }
  }
  return out;
}

std::string format_csv(const Seq& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(index_of(xs[i]));
  }
  return out;
}

Seq parse_csv(std::string_view text) {
  text = trim(text);
  Seq out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    const auto id = parse_unsigned(field, 10, "element");
    if (id > 255) throw std::invalid_argument("element out of range: " + std::string(field));
    out.push_back(elem(static_cast<unsigned>(id)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_pred(Pred p, unsigned alphabet_size) {
  std::string out = "0b";
  for (unsigned i = alphabet_size; i-- > 0;) out += (p.members() >> i) & 1u ? '1' : '0';
  return out;
}

Pred parse_pred(std::string_view text) {
  text = trim(text);
  std::uint64_t mask = 0;
  if (text.starts_with("0b") || text.starts_with("0B")) {
    mask = parse_unsigned(text.substr(2), 2, "predicate bitmask");
  } else if (text.starts_with("0x") || text.starts_with("0X")) {
    mask = parse_unsigned(text.substr(2), 16, "predicate bitmask");
  } else {
    mask = parse_unsigned(text, 10, "predicate bitmask");
  }
  if (mask > 0xffffffffu) throw std::invalid_argument("predicate bitmask too wide");
  return Pred(static_cast<std::uint32_t>(mask));
}

std::string_view value_type(const Value& v) noexcept {
  return std::visit(overloaded{
                        [](std::uint64_t) { return std::string_view("nat"); },
                        [](Pred) { return std::string_view("pred"); },
                        [](const Seq&) { return std::string_view("seq"); },
                        [](const PairSeq&) { return std::string_view("pair-seq"); },
                        [](const NatSeq&) { return std::string_view("nat-seq"); },
                        [](const SeqPair&) { return std::string_view("seq-pair"); },
                        [](const SeqList&) { return std::string_view("seq-list"); },
                    },
                    v);
}

std::string render_value(const Value& v, unsigned alphabet_size) {
  return std::visit(
      overloaded{
          [](std::uint64_t n) { return std::to_string(n); },
          [&](Pred p) { return format_pred(p, alphabet_size); },
          [](const Seq& xs) { return render_seq(xs); },
          [](const PairSeq& zs) {
            std::string out = "[";
            for (std::size_t i = 0; i < zs.size(); ++i) {
              if (i != 0) out += ',';
              out += "(" + std::to_string(index_of(zs[i].first)) + "," +
                     std::to_string(index_of(zs[i].second)) + ")";
            }
            return out + "]";
          },
          [](const NatSeq& a) { return "(" + std::to_string(a.n) + ", " + render_seq(a.seq) + ")"; },
          [](const SeqPair& a) { return "(" + render_seq(a.first) + ", " + render_seq(a.second) + ")"; },
          [](const SeqList& ws) {
            std::string out = "[";
            for (std::size_t i = 0; i < ws.size(); ++i) {
              if (i != 0) out += ',';
              out += render_seq(ws[i]);
            }
            return out + "]";
          },
      },
      v);
}

ordered_json value_to_json(const Value& v, unsigned alphabet_size) {
  return std::visit(overloaded{
                        [](std::uint64_t n) { return ordered_json(n); },
                        [&](Pred p) { return ordered_json(format_pred(p, alphabet_size)); },
                        [](const Seq& xs) { return ordered_json(format_csv(xs)); },
                        [](const PairSeq& zs) {
                          auto out = ordered_json::array();
                          for (const auto& [a, b] : zs) out.push_back(format_csv(Seq{a, b}));
                          return out;
                        },
                        [](const NatSeq& a) {
                          return ordered_json{{"n", a.n}, {"seq", format_csv(a.seq)}};
                        },
                        [](const SeqPair& a) {
                          return ordered_json::array({format_csv(a.first), format_csv(a.second)});
                        },
                        [](const SeqList& ws) {
                          auto out = ordered_json::array();
                          for (const auto& w : ws) out.push_back(format_csv(w));
                          return out;
                        },
                    },
                    v);
}

Value value_from_json(std::string_view type, const ordered_json& j) {
  if (type == "nat") {
    if (!j.is_number_unsigned()) throw std::invalid_argument("expected a natural number, got " + j.dump());
    return j.get<std::uint64_t>();
  }
  if (type == "pred") return parse_pred(json_string(j));
  if (type == "seq") return parse_csv(json_string(j));
  if (type == "pair-seq") {
    PairSeq zs;
    for (const auto& item : json_array(j)) {
      const auto pair = parse_csv(json_string(item));
      if (pair.size() != 2) throw std::invalid_argument("pair must have two elements: " + item.dump());
      zs.emplace_back(pair[0], pair[1]);
    }
    return zs;
  }
  if (type == "nat-seq") {
    if (!j.is_object() || !j.contains("n") || !j.contains("seq") || !j["n"].is_number_unsigned()) {
      throw std::invalid_argument("malformed nat-seq: " + j.dump());
    }
    return NatSeq{j["n"].get<std::uint64_t>(), parse_csv(json_string(j["seq"]))};
  }
  if (type == "seq-pair") {
    const auto& a = json_array(j, 2);
    return SeqPair{parse_csv(json_string(a[0])), parse_csv(json_string(a[1]))};
  }
  if (type == "seq-list") {
    SeqList ws;
    for (const auto& item : json_array(j)) ws.push_back(parse_csv(json_string(item)));
    return ws;
  }
  throw std::invalid_argument("unknown value type: " + std::string(type));
}

ordered_json witness_to_json(const Witness& w, unsigned alphabet_size) {
  auto out = ordered_json::array();
  for (const auto& b : w) {
    out.push_back(ordered_json{{"name", b.name},
                               {"type", std::string(value_type(b.value))},
                               {"value", value_to_json(b.value, alphabet_size)}});
  }
  return out;
}

Witness witness_from_json(const ordered_json& j) {
  Witness out;
  for (const auto& item : json_array(j)) {
    if (!item.is_object() || !item.contains("name") || !item.contains("type") || !item.contains("value")) {
      throw std::invalid_argument("malformed binding: " + item.dump());
    }
    out.push_back(Binding{json_string(item["name"]), value_from_json(json_string(item["type"]), item["value"])});
  }
  return out;
}

const Value& binding(const Witness& w, std::string_view name) {
  for (const auto& b : w) {
    if (b.name == name) return b.value;
  }
  throw std::out_of_range("no binding named " + std::string(name));
}

}  // namespace galois
