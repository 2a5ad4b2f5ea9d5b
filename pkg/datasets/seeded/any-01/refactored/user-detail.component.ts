import { Component } from '@angular/core';
import { User, Api } from './user.model';

@Component({
  selector: 'app-user-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class UserDetailComponent {
  current: User | null = null;
  constructor(private api: Api) {}

  user: User | null = null;
  users: User[] = [];

}
