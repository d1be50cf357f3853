#ifndef WORDSETS_WORDSETS_HPP_
#define WORDSETS_WORDSETS_HPP_

#include "wordsets/apriori.hpp"
#include "wordsets/classifier.hpp"
#include "wordsets/corpus.hpp"
#include "wordsets/error.hpp"
#include "wordsets/evaluation.hpp"
#include "wordsets/itemset_mining.hpp"
#include "wordsets/model.hpp"
#include "wordsets/model_io.hpp"
#include "wordsets/preprocess.hpp"
#include "wordsets/rational.hpp"
#include "wordsets/synthetic.hpp"

#endif  // WORDSETS_WORDSETS_HPP_
