import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-user-header', template: `<p>{{ title }}</p>` })
export class UserHeaderComponent { title = 'User header'; }

@Component({ selector: 'app-user-footer', template: `<p>{{ title }}</p>` })
export class UserFooterComponent { title = 'User footer'; }

@Injectable({ providedIn: 'root' })
export class UserAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}
