// Citation anchors embedded in reports so CLI output names the results
// it relies on. `--cite` prints the full registry.

#ifndef GRAPHK_CITATIONS_HPP_
#define GRAPHK_CITATIONS_HPP_

#include <string>
#include <vector>

namespace graphk::cite {

// key: short anchor used inside reports; text: the statement it stands for.
struct Anchor {
  std::string key;
  std::string text;
};

extern const std::string kKpClass;
extern const std::string kSpiCriterion;
extern const std::string kBowenFranks;
extern const std::string kK1Split;
extern const std::string kKkRow;
extern const std::string kKKRow;
extern const std::string kCoeffRow;
extern const std::string kCompFull;
extern const std::string kCompConservative;
extern const std::string kCompFiniteIso;
extern const std::string kLiftOnto;
extern const std::string kM2HomotopyIff;
extern const std::string kClassGroups;
extern const std::string kPdUnitary;
extern const std::string kScaleConvention;

const std::vector<Anchor>& registry();

}  // namespace graphk::cite

#endif  // GRAPHK_CITATIONS_HPP_
