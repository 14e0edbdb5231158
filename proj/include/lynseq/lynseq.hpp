#pragma once

#include "lynseq/text.hpp"
#include "lynseq/lyndon.hpp"
#include "lynseq/order_trie.hpp"
#include "lynseq/succinct.hpp"
#include "lynseq/lex_smallest.hpp"
#include "lynseq/longest_lyndon.hpp"
#include "lynseq/common_lyndon.hpp"
#include "lynseq/oracle.hpp"
