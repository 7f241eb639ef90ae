#pragma once

#include <string>
#include <vector>

#include "gabm/scenario.hpp"

// Every prompt the engine sends lives here so experiments are auditable from
// one file. Changing any template changes scripted-run bytes; the golden
// fixtures pin the current wording.

namespace gabm::prompts {

// Fixed instruction for generating the shared-context summary.
inline constexpr const char* kSummarizeInstruction =
    "Summarize the characteristics in a concise and insightful fashion";

// The three questions every agent answers, in order, when acting.
inline constexpr const char* kQuestionSituation = "What kind of situation is this?";
inline constexpr const char* kQuestionIdentity = "What kind of person am I?";
inline constexpr const char* kQuestionAction =
    "What does a person like me do in a situation like this?";

std::string context_summary_prompt(const std::vector<std::string>& statements);

std::string formative_episode_prompt(const AgentProfile& profile, int age);

std::string self_summary_prompt(const AgentProfile& profile);

// One of the three questions, with the framing situation, retrieved memory
// texts, and the answers accumulated so far in this turn.
std::string agent_question_prompt(const std::string& question, const std::string& situation,
                                  const std::vector<std::string>& memories,
                                  const std::vector<std::string>& prior_answers);

std::string agent_system_text(const AgentProfile& profile);

std::string gm_resolve_prompt(const std::string& shared_summary,
                              const std::vector<std::string>& gm_memories,
                              const std::string& actor, const std::string& intent);

// 10-option multiple choice, "0 = strongly negative" through "9 = strongly
// positive"; the reply is parsed for a leading integer.
std::string opinion_prompt(const std::string& question, const std::string& target,
                           const std::vector<std::string>& memories);

std::string news_report_prompt(const std::vector<std::string>& gm_memories);

std::string agent_perspective_prompt(const std::string& agent_name,
                                     const std::vector<std::string>& observations);

}  // namespace gabm::prompts
