#include "gabm/prompts.hpp"

#include <sstream>

namespace gabm::prompts {

namespace {

std::string bullet_list(const std::vector<std::string>& items) {
  if (items.empty()) {
    return "(none)\n";
  }
  std::string out;
  for (const std::string& item : items) {
    out += "- " + item + "\n";
  }
  return out;
}

std::string profile_block(const AgentProfile& profile) {
  std::ostringstream out;
  out << "Name: " << profile.name << "\n";
  if (!profile.gender.empty()) {
    out << "Gender: " << profile.gender << "\n";
  }
  out << "Personality: " << describe_traits(profile.traits) << "\n";
  out << "Role: " << profile.context << "\n";
  out << "Goal: " << profile.goal << "\n";
  return out.str();
}

}  // namespace

std::string context_summary_prompt(const std::vector<std::string>& statements) {
  std::string out = std::string(kSummarizeInstruction) + ".\n\nCharacteristics:\n";
  out += bullet_list(statements);
  return out;
}

std::string formative_episode_prompt(const AgentProfile& profile, int age) {
  std::ostringstream out;
  out << "Invent one formative memory of " << profile.name << " at age " << age
      << ", consistent with the profile below. Write a single short paragraph in the third "
         "person, past tense.\n\n"
      << profile_block(profile);
  return out.str();
}

std::string self_summary_prompt(const AgentProfile& profile) {
  std::ostringstream out;
  out << "Write a concise third-person summary of who " << profile.name
      << " is today, covering their age, occupation or role, reputation, and current habits, "
         "based on the profile below.\n\n"
      << profile_block(profile);
  return out.str();
}

std::string agent_system_text(const AgentProfile& profile) {
  std::ostringstream out;
  out << "You are " << profile.name << ". Stay in character.\n\n" << profile_block(profile);
  return out.str();
}

std::string agent_question_prompt(const std::string& question, const std::string& situation,
                                  const std::vector<std::string>& memories,
                                  const std::vector<std::string>& prior_answers) {
  std::string out = question + "\n\nSituation:\n" + situation + "\n\nRelevant memories:\n";
  out += bullet_list(memories);
  if (!prior_answers.empty()) {
    out += "\nYour answers so far:\n";
    out += bullet_list(prior_answers);
  }
  out += "\nAnswer concisely in the first person.";
  return out;
}

std::string gm_resolve_prompt(const std::string& shared_summary,
                              const std::vector<std::string>& gm_memories,
                              const std::string& actor, const std::string& intent) {
  std::string out =
      "You are the game master of a simulation. You decide what actually happens when "
      "characters act, keeping the world consistent.\n\nWorld:\n" +
      shared_summary + "\n\nRecent events:\n";
  out += bullet_list(gm_memories);
  out += "\n" + actor + " intends the following:\n" + intent + "\n\n";
  out += "Describe what actually happens as a single third-person paragraph starting with " +
         actor + "'s action and its immediate consequences.";
  return out;
}

std::string opinion_prompt(const std::string& question, const std::string& target,
                           const std::vector<std::string>& memories) {
  std::string out = question + "\n\nWhat you remember about " + target + ":\n";
  out += bullet_list(memories);
  out +=
      "\nChoose the option closest to your view:\n"
      "0 = strongly negative\n"
      "1 = very negative\n"
      "2 = negative\n"
      "3 = somewhat negative\n"
      "4 = slightly negative\n"
      "5 = slightly positive\n"
      "6 = somewhat positive\n"
      "7 = positive\n"
      "8 = very positive\n"
      "9 = strongly positive\n"
      "\nAnswer with the single digit only.";
  return out;
}

std::string news_report_prompt(const std::vector<std::string>& gm_memories) {
  std::string out =
      "Write a news report covering the episode below, compiling the events into a coherent "
      "story with a headline.\n\nEvents:\n";
  out += bullet_list(gm_memories);
  return out;
}

std::string agent_perspective_prompt(const std::string& agent_name,
                                     const std::vector<std::string>& observations) {
  std::string out = "Narrate the episode from " + agent_name +
                    "'s perspective as a short first-person account, based only on what they "
                    "observed.\n\nObservations:\n";
  out += bullet_list(observations);
  return out;
}

}  // namespace gabm::prompts
