#include "apolar/census.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/duality.hpp"
#include "apolar/sampling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

namespace apolar {

CensusTable census(const CensusParams& params, unsigned threads) {
  if (params.samples < 1) throw std::invalid_argument("census: samples must be >= 1");
  if (params.coeff_bound < 1) throw std::invalid_argument("census: coefficient bound must be >= 1");
  if (params.l < 0 || params.d < 0 || params.d > params.l)
    throw std::invalid_argument("census: need 0 <= d <= l");

  FormSampler sampler(params.seed);
  std::vector<BinaryForm> forms;
  forms.reserve(static_cast<std::size_t>(params.samples));
  for (int i = 0; i < params.samples; ++i) forms.push_back(sampler.integer_form(params.l, params.coeff_bound));

  std::vector<std::pair<int, int>> results(forms.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(forms.size()));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < forms.size(); i += threads)
          results[i] = {cactus_rank(forms[i]), coker_dim(forms[i], params.d)};
      });
    }
  }

  std::map<std::pair<int, int>, int> counts;
  for (const auto& key : results) ++counts[key];

  CensusTable table{params, {}, generic_cactus_rank(params.l), 0, 0};
  for (const auto& [key, count] : counts) {
    table.rows.push_back({key.first, key.second, count});
    if (key.first == table.top_stratum) table.top_count += count;
  }
  table.top_fraction = Rational(Integer(table.top_count), Integer(params.samples));
  table.top_fraction.canonicalize();
  return table;
}

}  // namespace apolar
