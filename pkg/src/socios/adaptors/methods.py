"""The 16 aggregation methods every adaptor may implement."""
from __future__ import annotations

GET_PERSONS = "getPersons"
CONNECTED_PERSONS = "connectedPersons"
MY_CONNECTED_PERSONS = "myConnectedPersons"
FIND_PERSONS = "findPersons"
GET_MEDIA_ITEMS = "getMediaItems"
GET_MEDIA_ITEMS_FOR_USER = "getMediaItemsForUser"
GET_MEDIA_ITEMS_FOR_PAGE = "getMediaItemsForPage"
FIND_MEDIA_ITEMS = "findMediaItems"
FIND_RELEVANT_MEDIA_ITEMS = "findRelevantMediaItems"
GET_ACTIVITIES = "getActivities"
GET_ACTIVITIES_FOR_USER = "getActivitiesForUser"
FIND_ACTIVITIES = "findActivities"
GET_COMMENTS = "getComments"
GET_COMMENTS_FOR_MEDIA_ITEM = "getCommentsForMediaItem"
GET_COMMENTS_FOR_ACTIVITY = "getCommentsForActivity"
POST_MESSAGE = "postMessage"

ALL_METHODS: frozenset[str] = frozenset({
    GET_PERSONS,
    CONNECTED_PERSONS,
    MY_CONNECTED_PERSONS,
    FIND_PERSONS,
    GET_MEDIA_ITEMS,
    GET_MEDIA_ITEMS_FOR_USER,
    GET_MEDIA_ITEMS_FOR_PAGE,
    FIND_MEDIA_ITEMS,
    FIND_RELEVANT_MEDIA_ITEMS,
    GET_ACTIVITIES,
    GET_ACTIVITIES_FOR_USER,
    FIND_ACTIVITIES,
    GET_COMMENTS,
    GET_COMMENTS_FOR_MEDIA_ITEM,
    GET_COMMENTS_FOR_ACTIVITY,
    POST_MESSAGE,
})

# Methods that only exist on networks with a native notion of an activity.
ACTIVITY_METHODS: frozenset[str] = frozenset({
    GET_ACTIVITIES,
    GET_ACTIVITIES_FOR_USER,
    FIND_ACTIVITIES,
    GET_COMMENTS_FOR_ACTIVITY,
})

# The only two methods that act on private data / on behalf of a user.
AUTH_METHODS: frozenset[str] = frozenset({MY_CONNECTED_PERSONS, POST_MESSAGE})
