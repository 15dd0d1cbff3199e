#pragma once

#include <string>

namespace fixtures {

// The three worked tweets: a mention-less original, a retweet of it, and a
// retweet of the retweet whose mention list ends with the original author.
inline std::string worked_example_text() {
  return R"({"tweet_id": 725516302819938305, "user_id": 709920419529281537, "created_at": "2016-04-28T02:45:40Z", "text": "Purdue day of giving", "user_mentions": []}
{"tweet_id": 727147016233558016, "user_id": 3239853627, "created_at": "2016-05-02T14:45:33Z", "text": "RT purdue day of giving", "user_mentions": [709920419529281537]}
{"tweet_id": 727495513277382656, "user_id": 325069363, "created_at": "2016-05-03T13:50:21Z", "text": "RT RT purdue day of giving", "user_mentions": [3239853627, 709920419529281537]}
)";
}

inline std::string data_path(const std::string& name) { return std::string(MENTIONNET_DATA_DIR) + "/" + name; }

}  // namespace fixtures
