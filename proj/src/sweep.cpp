#include "diagcount/sweep.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "diagcount/bounds.hpp"
#include "diagcount/charsum.hpp"
#include "diagcount/counting.hpp"
#include "diagcount/oracle.hpp"

namespace diagcount {

namespace {

struct PendingRow {
  std::vector<u64> ds;
  std::vector<unsigned> ms;
  std::vector<FieldElem> as;
  FieldElem b;
};

std::string join_u64(const std::vector<u64>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string join_unsigned(const std::vector<unsigned>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

i64 micros_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void run_row(const FieldCtxPtr& ctx, CharsumEngine& engine,
             const PendingRow& pr, const RouteOptions& opts, SweepRow& row) {
  const FieldCtx& F = *ctx;
  Equation eq;
  eq.ctx = ctx;
  for (size_t i = 0; i < pr.ds.size(); ++i)
    eq.terms.push_back(Term{pr.as[i], pr.ds[i], pr.ms[i]});
  eq.b = pr.b;

  row.p = F.p();
  row.N = F.deg();
  row.s = unsigned(eq.terms.size());
  row.d_vec = join_u64(pr.ds);
  row.m_vec = join_unsigned(pr.ms);
  row.b_index = F.index(eq.b);

  Applicability ap = classify(eq);
  std::optional<BigInt> count;
  std::string method;

  auto note = [&](const CountReport& rep, std::string* micros_cell,
                  i64 micros) {
    if (opts.timing) *micros_cell = std::to_string(micros);
    if (!count) {
      count = rep.count;
      method = rep.method;
    } else if (*count != rep.count) {
      throw IntegralityViolation("methods disagree on a sweep row");
    }
  };

  if (ap.linear_reduced || ap.zero_form || ap.equal_d_literal ||
      ap.square_reduced) {
    auto start = std::chrono::steady_clock::now();
    CountReport rep;
    if (ap.linear_reduced)
      rep = count_linear(eq);
    else if (ap.zero_form)
      rep = count_diagonal_zero(eq);
    else if (ap.equal_d_literal)
      rep = count_diagonal_equal_d(eq);
    else {
      Equation sq = eq;
      for (Term& t : sq.terms) t.d = 2;
      rep = count_quadratic(sq);
    }
    note(rep, &row.micros_closed, micros_since(start));
  }
  if (ap.charsum_work <= opts.budget) {
    auto start = std::chrono::steady_clock::now();
    CountReport rep = engine.count(eq.terms, eq.b);
    note(rep, &row.micros_charsum, micros_since(start));
  }
  if (ap.domain <= opts.budget) {
    auto start = std::chrono::steady_clock::now();
    CountReport rep{brute_count(eq, opts.budget), "brute", {}, std::nullopt};
    note(rep, &row.micros_brute, micros_since(start));
  }

  if (!count) return;  // stays "skipped"
  row.count = count->str();
  row.method = method;

  bool full_field = true;
  for (const Term& t : eq.terms) full_field = full_field && t.m == F.deg();
  if (full_field && F.is_zero(eq.b))
    row.weil_ok = weil_bound_check(eq, *count).holds ? "1" : "0";
  if (ap.zero_form)
    row.exist_ok = existence_check(eq).display_holds ? "1" : "0";
}

}  // namespace

std::vector<SweepRow> run_sweep(const json& spec, const RouteOptions& opts,
                                unsigned jobs) {
  if (!spec.is_object()) throw InvalidInput("sweep spec must be an object");
  for (const char* key : {"p", "N", "m", "d", "b"})
    if (!spec.contains(key))
      throw InvalidInput(std::string("sweep spec needs \"") + key + "\"");
  if (!spec["p"].is_number_integer() || !spec["N"].is_number_integer())
    throw InvalidInput("p and N must be integers");
  unsigned max_bits = 40;
  if (spec.contains("max_bits")) {
    if (!spec["max_bits"].is_number_integer())
      throw InvalidInput("max_bits must be an integer");
    max_bits = spec["max_bits"].get<unsigned>();
  }
  FieldCtxPtr ctx =
      build_field(spec["p"].get<u64>(), spec["N"].get<unsigned>(), max_bits);

  auto parse_uvec = [](const json& j, const char* what) {
    if (!j.is_array() || j.empty())
      throw InvalidInput(std::string(what) + " must be a nonempty array");
    std::vector<u64> v;
    for (const json& e : j) {
      if (!e.is_number_integer() || e.get<i64>() < 0)
        throw InvalidInput(std::string(what) +
                           " entries must be nonnegative integers");
      v.push_back(e.get<u64>());
    }
    return v;
  };

  std::vector<std::vector<unsigned>> m_vecs;
  for (const json& mv : spec["m"]) {
    std::vector<unsigned> ms;
    for (u64 m : parse_uvec(mv, "m vector")) ms.push_back(unsigned(m));
    m_vecs.push_back(std::move(ms));
  }
  std::vector<std::vector<u64>> d_vecs;
  for (const json& dv : spec["d"]) d_vecs.push_back(parse_uvec(dv, "d vector"));

  std::vector<std::vector<FieldElem>> a_vecs;
  if (spec.contains("a")) {
    for (const json& av : spec["a"]) {
      if (!av.is_array())
        throw InvalidInput("coefficient vectors must be arrays");
      std::vector<FieldElem> as;
      for (const json& e : av) as.push_back(parse_element(*ctx, e));
      a_vecs.push_back(std::move(as));
    }
  }
  std::vector<FieldElem> bs;
  for (const json& bj : spec["b"]) bs.push_back(parse_element(*ctx, bj));
  if (bs.empty()) throw InvalidInput("b must be a nonempty array");

  std::vector<PendingRow> pending;
  for (const auto& ms : m_vecs)
    for (const auto& ds : d_vecs) {
      if (ms.size() != ds.size()) continue;
      std::vector<std::vector<FieldElem>> as_choices;
      if (a_vecs.empty()) {
        as_choices.push_back(
            std::vector<FieldElem>(ms.size(), ctx->one()));
      } else {
        for (const auto& as : a_vecs)
          if (as.size() == ms.size()) as_choices.push_back(as);
      }
      for (const auto& as : as_choices)
        for (const FieldElem& b : bs)
          pending.push_back(PendingRow{ds, ms, as, b});
    }

  std::vector<SweepRow> rows(pending.size());
  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>(jobs, std::max<size_t>(pending.size(), 1));

  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        CharsumEngine engine(ctx);
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= pending.size()) break;
          run_row(ctx, engine, pending[i], opts, rows[i]);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(pending.size());
      }
    });
  }
  for (std::thread& t : workers) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string sweep_to_tsv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "p\tN\ts\td_vec\tm_vec\tb\tcount\tmethod\tmicros_closed\t"
        "micros_charsum\tmicros_brute\tweil_ok\texist_ok\n";
  for (const SweepRow& r : rows) {
    os << r.p << "\t" << r.N << "\t" << r.s << "\t" << r.d_vec << "\t"
       << r.m_vec << "\t" << r.b_index << "\t" << r.count << "\t" << r.method
       << "\t" << r.micros_closed << "\t" << r.micros_charsum << "\t"
       << r.micros_brute << "\t" << r.weil_ok << "\t" << r.exist_ok << "\n";
  }
  return os.str();
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const SweepRow& r : rows) {
    json j;
    j["p"] = r.p;
    j["N"] = r.N;
    j["s"] = r.s;
    j["d_vec"] = r.d_vec;
    j["m_vec"] = r.m_vec;
    j["b"] = r.b_index;
    j["count"] = r.count;
    j["method"] = r.method;
    j["micros_closed"] = r.micros_closed;
    j["micros_charsum"] = r.micros_charsum;
    j["micros_brute"] = r.micros_brute;
    j["weil_ok"] = r.weil_ok;
    j["exist_ok"] = r.exist_ok;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace diagcount
