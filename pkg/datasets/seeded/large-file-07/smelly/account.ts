import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-account-header', template: `<p>{{ title }}</p>` })
export class AccountHeaderComponent { title = 'Account header'; }

@Component({ selector: 'app-account-footer', template: `<p>{{ title }}</p>` })
export class AccountFooterComponent { title = 'Account footer'; }

@Injectable({ providedIn: 'root' })
export class AccountAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}
