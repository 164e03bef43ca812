#include "magnomech/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "magnomech/errors.hpp"

namespace magnomech {

SweepTable run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  spec.validate();

  SweepTable table;
  table.axis1_param = spec.axis1.param;
  if (spec.axis2) table.axis2_param = spec.axis2->param;
  if (spec.curve) table.curve_param = spec.curve->param;

  const std::vector<double> axis1 = spec.axis1.values();
  const std::vector<double> axis2 = spec.axis2 ? spec.axis2->values() : std::vector<double>{};
  const std::vector<double> curves = spec.curve ? spec.curve->values : std::vector<double>{};

  const std::size_t n_curve = std::max<std::size_t>(curves.size(), 1);
  const std::size_t n_axis2 = std::max<std::size_t>(axis2.size(), 1);
  table.rows.resize(n_curve * n_axis2 * axis1.size());

  std::size_t idx = 0;
  for (std::size_t c = 0; c < n_curve; ++c) {
    for (std::size_t k = 0; k < n_axis2; ++k) {
      for (double x : axis1) {
        SweepRow& row = table.rows[idx++];
        row.params = spec.base;
        if (spec.curve) {
          row.curve_value = curves[c];
          set_parameter(row.params, spec.curve->param, curves[c]);
        }
        if (spec.axis2) {
          row.axis2_value = axis2[k];
          set_parameter(row.params, spec.axis2->param, axis2[k]);
        }
        row.axis1_value = x;
        set_parameter(row.params, spec.axis1.param, x);
      }
    }
  }

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, table.rows.size()));

  auto evaluate = [&](SweepRow& row) { row.report = evaluate_point(row.params, options.evaluate); };

  if (threads <= 1) {
    for (SweepRow& row : table.rows) evaluate(row);
    return table;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < table.rows.size(); i = next.fetch_add(1)) {
          try {
            evaluate(table.rows[i]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(table.rows.size());
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

void write_csv(std::ostream& os, const SweepTable& table) {
  os << kCsvHeader << '\n';
  std::string line;
  for (const SweepRow& row : table.rows) {
    const SteadyStateReport& r = row.report;
    line.clear();
    line += table.curve_param;
    line += ',';
    if (row.curve_value) line += format_number(*row.curve_value);
    line += ',';
    if (row.axis2_value) line += format_number(*row.axis2_value);
    line += ',';
    line += format_number(row.axis1_value);
    line += r.stable ? ",true," : ",false,";
    line += format_number(r.spectral_abscissa);
    for (double v : {r.pi_total, r.pi_mb, r.pi_trace, r.phi, r.mutual_info, r.weak_coupling_ratio,
                     r.nu[0], r.nu[1], r.nu[2]}) {
      line += ',';
      line += r.stable ? format_number(v) : "nan";
    }
    line += '\n';
    os << line;
  }
}

void run_sweep_to_csv(const SweepSpec& spec, std::ostream& fallback, const SweepOptions& options) {
  if (spec.output.empty()) {
    write_csv(fallback, run_sweep(spec, options));
    return;
  }
  std::ofstream out(spec.output, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + spec.output + "' for writing");
  write_csv(out, run_sweep(spec, options));
  out.flush();
  if (!out) throw IoError("failed writing output file '" + spec.output + "'");
}

}  // namespace magnomech
