#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "orbdual/exactlin.hpp"

namespace orbdual {

template <class Key>
using SparseRow = std::map<Key, Scalar>;

template <class Key>
void axpy(SparseRow<Key>& y, const Scalar& a, const SparseRow<Key>& x) {
	for (const auto& [k, c] : x) {
		auto [it, fresh] = y.try_emplace(k, a * c);
		if (fresh) continue;
		it->second += a * c;
		if (sgn(it->second) == 0) y.erase(it);
	}
}

// Incremental elimination over sparse rows. Each inserted row carries a tag; rows that
// reduce to zero report the dependency as a combination of tags.
template <class Key>
class SparseEliminator {
   public:
	using Combination = std::map<std::size_t, Scalar>;

	struct Result {
		bool independent = false;
		Combination relation;  // sum relation[t] * row(t) == 0 when dependent
	};

	Result insert(SparseRow<Key> v, std::size_t tag) {
		Combination comb{{tag, Scalar(1)}};
		auto it = v.begin();
		while (it != v.end()) {
			auto p = pivots_.find(it->first);
			if (p == pivots_.end()) {
				++it;
				continue;
			}
			const Key k = it->first;
			const Scalar f = -it->second;
			axpy(v, f, p->second.first);
			axpy(comb, f, p->second.second);
			it = v.upper_bound(k);
		}
		if (v.empty()) return {false, std::move(comb)};
		const Key lead = v.begin()->first;
		const Scalar inv = 1 / v.begin()->second;
		for (auto& [k, c] : v) c *= inv;
		for (auto& [k, c] : comb) c *= inv;
		pivots_.emplace(lead, std::make_pair(std::move(v), std::move(comb)));
		return {true, {}};
	}

	[[nodiscard]] std::size_t rank() const { return pivots_.size(); }

	// reduced row echelon form of the stored rows, ordered by leading key
	[[nodiscard]] std::vector<SparseRow<Key>> reduced() const {
		std::vector<SparseRow<Key>> rows;
		std::vector<Key> leads;
		for (const auto& [k, rc] : pivots_) {
			rows.push_back(rc.first);
			leads.push_back(k);
		}
		for (std::size_t i = rows.size(); i-- > 0;) {
			for (std::size_t j = 0; j < rows.size(); ++j) {
				if (j == i) continue;
				auto f = rows[j].find(leads[i]);
				if (f == rows[j].end()) continue;
				const Scalar c = -f->second;
				axpy(rows[j], c, rows[i]);
			}
		}
		return rows;
	}

   private:
	std::map<Key, std::pair<SparseRow<Key>, Combination>> pivots_;
};

}  // namespace orbdual
