import { Component } from '@angular/core';
import { Account, Api } from './account.model';

@Component({
  selector: 'app-account-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class AccountDetailComponent {
  current: Account | null = null;
  constructor(private api: Api) {}

  account: Account | null = null;
  accounts: Account[] = [];

}
