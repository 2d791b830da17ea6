#include "clusel/indices/registry.hpp"

#include <cctype>
#include <string>

#include "clusel/error.hpp"
#include "clusel/indices/cdbw.hpp"
#include "clusel/indices/dbcv.hpp"
#include "clusel/indices/dunn.hpp"
#include "clusel/indices/sdbw.hpp"
#include "clusel/indices/silhouette.hpp"

namespace clusel::indices {

IndexScore compute_index(std::string_view name, const Dataset& data, const Partition& part) {
  std::string key;
  for (char c : name) {
    if (c != '_' && c != '-') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (key == "silhouette") return silhouette_score(data, part);
  if (key == "dunn") return dunn(data, part);
  if (key == "sdbw") return sdbw(data, part);
  if (key == "cdbw") return cdbw(data, part);
  if (key == "dbcv") return dbcv_score(data, part);
  throw Error(Errc::InvalidArgument, "unknown index '" + std::string(name) + "'");
}

}  // namespace clusel::indices
